#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fsmlock/netlist.hpp"

namespace fsmlock {

/// Flattened two-valued evaluator for the combinational portion of a netlist.
/// Net values are uint64 words, so one eval pass simulates up to 64
/// independent assignments (keys, stimuli, states) in parallel.
class CombEval {
  public:
    explicit CombEval(const Netlist& n);

    const Netlist& netlist() const { return *netlist_; }
    std::size_t net_count() const { return netlist_->net_count(); }

    /// Evaluates all gates in topological order; `vals` is indexed by net id
    /// and must have net_count() entries. Input/key/state nets must be loaded
    /// by the caller beforehand.
    void eval(std::span<uint64_t> vals) const;

  private:
    struct Op {
        GateKind kind;
        NetId out;
        std::vector<NetId> ins;
    };
    const Netlist* netlist_;
    std::vector<Op> ops_;
};

/// Cycle-accurate sequential simulation state, 64 lanes wide. Outputs of
/// frame t are sampled combinationally from (state_t, input_t); the next
/// state is latched afterwards, matching the unrolled CNF timing frame for
/// frame.
class SeqSim {
  public:
    explicit SeqSim(const CombEval& eval);

    void reset();  // back to configured flip-flop init values (all lanes)

    /// Loads per-lane key words (bit i of `key_words[j]` = key bit j of lane
    /// i). Key layout persists across frames.
    void set_key_words(std::span<const uint64_t> key_words);
    void set_key(const BitVector& key);  // same key in every lane

    /// Clocks one frame: drives input words, samples outputs, latches state.
    /// input_words/output_words are indexed by input/output position.
    void step(std::span<const uint64_t> input_words, std::span<uint64_t> output_words);

    std::span<const uint64_t> state_words() const { return state_; }
    void set_state_words(std::span<const uint64_t> words);

  private:
    const CombEval* eval_;
    std::vector<uint64_t> vals_;
    std::vector<uint64_t> state_;  // one word per flip-flop
    std::vector<uint64_t> key_;    // one word per key input
};

/// Simulates `seq` from the reset state under `key`; one output frame per
/// input frame.
OutputSequence simulate(const Netlist& n, const BitVector& key, const InputSequence& seq);

/// Black-box oracle over an activated circuit: only the query surface is
/// visible, the key is not reachable through the interface. Every query
/// restarts from the reset state.
class Oracle {
  public:
    virtual ~Oracle() = default;
    virtual std::size_t input_width() const = 0;
    virtual std::size_t output_width() const = 0;
    virtual OutputSequence query(const InputSequence& seq) = 0;
};

class OracleHandle final : public Oracle {
  public:
    OracleHandle(const Netlist& n, const BitVector& key);
    std::size_t input_width() const override;
    std::size_t output_width() const override;
    OutputSequence query(const InputSequence& seq) override;
    std::size_t queries_made() const { return queries_; }

  private:
    Netlist netlist_;
    BitVector key_;
    std::size_t queries_ = 0;
};

}  // namespace fsmlock
