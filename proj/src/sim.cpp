#include "fsmlock/sim.hpp"

#include <stdexcept>

namespace fsmlock {

CombEval::CombEval(const Netlist& n) : netlist_(&n) {
    for (std::size_t g : n.topo_order()) {
        const Gate& gate = n.gates[g];
        ops_.push_back({gate.kind, gate.output, gate.inputs});
    }
}

void CombEval::eval(std::span<uint64_t> vals) const {
    for (const Op& op : ops_) {
        uint64_t w = 0;
        switch (op.kind) {
            case GateKind::And:
            case GateKind::Nand:
                w = ~uint64_t{0};
                for (NetId in : op.ins) w &= vals[static_cast<size_t>(in)];
                if (op.kind == GateKind::Nand) w = ~w;
                break;
            case GateKind::Or:
            case GateKind::Nor:
                w = 0;
                for (NetId in : op.ins) w |= vals[static_cast<size_t>(in)];
                if (op.kind == GateKind::Nor) w = ~w;
                break;
            case GateKind::Xor:
            case GateKind::Xnor:
                w = 0;
                for (NetId in : op.ins) w ^= vals[static_cast<size_t>(in)];
                if (op.kind == GateKind::Xnor) w = ~w;
                break;
            case GateKind::Not:
                w = ~vals[static_cast<size_t>(op.ins[0])];
                break;
            case GateKind::Buf:
                w = vals[static_cast<size_t>(op.ins[0])];
                break;
            case GateKind::Mux2: {
                uint64_t s = vals[static_cast<size_t>(op.ins[0])];
                w = (~s & vals[static_cast<size_t>(op.ins[1])]) | (s & vals[static_cast<size_t>(op.ins[2])]);
                break;
            }
            case GateKind::Const0:
                w = 0;
                break;
            case GateKind::Const1:
                w = ~uint64_t{0};
                break;
        }
        vals[static_cast<size_t>(op.out)] = w;
    }
}

SeqSim::SeqSim(const CombEval& eval)
    : eval_(&eval),
      vals_(eval.net_count(), 0),
      state_(eval.netlist().flipflops.size(), 0),
      key_(eval.netlist().key_inputs.size(), 0) {
    reset();
}

void SeqSim::reset() {
    const auto& ffs = eval_->netlist().flipflops;
    for (std::size_t i = 0; i < ffs.size(); ++i) state_[i] = ffs[i].init ? ~uint64_t{0} : 0;
}

void SeqSim::set_key_words(std::span<const uint64_t> key_words) {
    if (key_words.size() != key_.size()) throw std::invalid_argument("key width mismatch");
    for (std::size_t i = 0; i < key_.size(); ++i) key_[i] = key_words[i];
}

void SeqSim::set_key(const BitVector& key) {
    if (key.width() != key_.size()) throw std::invalid_argument("key width mismatch");
    for (std::size_t i = 0; i < key_.size(); ++i) key_[i] = key.get(i) ? ~uint64_t{0} : 0;
}

void SeqSim::set_state_words(std::span<const uint64_t> words) {
    if (words.size() != state_.size()) throw std::invalid_argument("state width mismatch");
    for (std::size_t i = 0; i < state_.size(); ++i) state_[i] = words[i];
}

void SeqSim::step(std::span<const uint64_t> input_words, std::span<uint64_t> output_words) {
    const Netlist& n = eval_->netlist();
    if (input_words.size() != n.inputs.size()) throw std::invalid_argument("input width mismatch");
    for (std::size_t i = 0; i < n.inputs.size(); ++i) vals_[static_cast<size_t>(n.inputs[i])] = input_words[i];
    for (std::size_t i = 0; i < n.key_inputs.size(); ++i) vals_[static_cast<size_t>(n.key_inputs[i])] = key_[i];
    for (std::size_t i = 0; i < n.flipflops.size(); ++i) vals_[static_cast<size_t>(n.flipflops[i].q)] = state_[i];
    eval_->eval(vals_);
    for (std::size_t i = 0; i < n.outputs.size(); ++i) output_words[i] = vals_[static_cast<size_t>(n.outputs[i])];
    for (std::size_t i = 0; i < n.flipflops.size(); ++i) state_[i] = vals_[static_cast<size_t>(n.flipflops[i].d)];
}

OutputSequence simulate(const Netlist& n, const BitVector& key, const InputSequence& seq) {
    if (key.width() != n.key_inputs.size()) throw std::invalid_argument("key width mismatch");
    CombEval eval(n);
    SeqSim sim(eval);
    sim.set_key(key);
    OutputSequence out;
    out.reserve(seq.size());
    std::vector<uint64_t> in_words(n.inputs.size()), out_words(n.outputs.size());
    for (const BitVector& frame : seq) {
        if (frame.width() != n.inputs.size()) throw std::invalid_argument("input frame width mismatch");
        for (std::size_t i = 0; i < in_words.size(); ++i) in_words[i] = frame.get(i) ? 1 : 0;
        sim.step(in_words, out_words);
        BitVector o(n.outputs.size());
        for (std::size_t i = 0; i < out_words.size(); ++i) o.set(i, out_words[i] & 1);
        out.push_back(std::move(o));
    }
    return out;
}

OracleHandle::OracleHandle(const Netlist& n, const BitVector& key) : netlist_(n), key_(key) {
    if (key.width() != n.key_inputs.size()) throw std::invalid_argument("oracle key width mismatch");
}

std::size_t OracleHandle::input_width() const { return netlist_.inputs.size(); }
std::size_t OracleHandle::output_width() const { return netlist_.outputs.size(); }

OutputSequence OracleHandle::query(const InputSequence& seq) {
    ++queries_;
    return simulate(netlist_, key_, seq);
}

}  // namespace fsmlock
