#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fsmlock/bitvec.hpp"

namespace fsmlock {

using NetId = int32_t;
constexpr NetId kNullNet = -1;

enum class GateKind {
    And,
    Nand,
    Or,
    Nor,
    Xor,
    Xnor,
    Not,
    Buf,
    Mux2,  // inputs: (select, when0, when1)
    Const0,
    Const1,
};

const char* gate_kind_name(GateKind k);
std::optional<GateKind> gate_kind_from_name(const std::string& s);

struct Gate {
    GateKind kind;
    std::vector<NetId> inputs;
    NetId output = kNullNet;
};

struct FlipFlop {
    NetId q = kNullNet;
    NetId d = kNullNet;
    bool init = false;
};

/// Covert-gate metadata: a fan-in edge that carries no logic but shows up in
/// the structural dependency graph.
struct DummyEdge {
    NetId from = kNullNet;
    std::size_t to_gate = 0;
};

struct NetlistError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gate-level circuit. Immutable once built/validated; cheap to copy.
///
/// `inputs` holds the free primary inputs; key inputs are kept in their own
/// ordered list (detected by name prefix at parse time). Output/flip-flop/gate
/// order is declaration order, and net ids are dense integers assigned in
/// declaration order — all downstream determinism rests on that.
struct Netlist {
    std::string name;
    std::vector<NetId> inputs;
    std::vector<NetId> outputs;
    std::vector<NetId> key_inputs;
    std::vector<FlipFlop> flipflops;
    std::vector<Gate> gates;
    std::vector<std::string> net_names;
    std::unordered_map<std::string, NetId> name_to_id;
    std::vector<DummyEdge> dummy_edges;

    std::size_t net_count() const { return net_names.size(); }

    NetId add_net(const std::string& net_name);
    NetId find_net(const std::string& net_name) const;  // kNullNet if absent
    const std::string& net_name(NetId id) const { return net_names.at(static_cast<size_t>(id)); }

    /// Picks a fresh name derived from `stem` that does not collide.
    NetId add_fresh_net(const std::string& stem);

    /// Checks all structural invariants (single driver, arity, no
    /// combinational cycle, key/input disjointness). Throws NetlistError.
    void validate() const;

    /// Gate indices in a deterministic topological order of the combinational
    /// portion (flip-flops cut). Throws NetlistError on a combinational cycle.
    std::vector<std::size_t> topo_order() const;

    bool is_flipflop_q(NetId id) const;
};

/// A netlist reinterpreted as a combinational block: flip-flop Q nets become
/// pseudo primary inputs, D nets pseudo primary outputs.
struct CombView {
    const Netlist* base = nullptr;
    std::vector<NetId> pseudo_inputs;   // FF q nets, declaration order
    std::vector<NetId> pseudo_outputs;  // FF d nets, declaration order
    std::vector<std::size_t> topo;      // topological gate order
};

CombView comb_view(const Netlist& n);

/// Name-based structural equality: same nets, same gates, same declaration
/// orders. Net ids themselves may differ.
bool structurally_equal(const Netlist& a, const Netlist& b);

}  // namespace fsmlock
