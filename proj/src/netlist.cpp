#include "fsmlock/netlist.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace fsmlock {

const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::And: return "AND";
        case GateKind::Nand: return "NAND";
        case GateKind::Or: return "OR";
        case GateKind::Nor: return "NOR";
        case GateKind::Xor: return "XOR";
        case GateKind::Xnor: return "XNOR";
        case GateKind::Not: return "NOT";
        case GateKind::Buf: return "BUF";
        case GateKind::Mux2: return "MUX";
        case GateKind::Const0: return "CONST0";
        case GateKind::Const1: return "CONST1";
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(const std::string& s) {
    std::string u;
    u.reserve(s.size());
    for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (u == "AND") return GateKind::And;
    if (u == "NAND") return GateKind::Nand;
    if (u == "OR") return GateKind::Or;
    if (u == "NOR") return GateKind::Nor;
    if (u == "XOR") return GateKind::Xor;
    if (u == "XNOR") return GateKind::Xnor;
    if (u == "NOT" || u == "INV") return GateKind::Not;
    if (u == "BUF" || u == "BUFF") return GateKind::Buf;
    if (u == "MUX" || u == "MUX2") return GateKind::Mux2;
    if (u == "CONST0" || u == "GND") return GateKind::Const0;
    if (u == "CONST1" || u == "VDD") return GateKind::Const1;
    return std::nullopt;
}

NetId Netlist::add_net(const std::string& n) {
    auto it = name_to_id.find(n);
    if (it != name_to_id.end()) return it->second;
    NetId id = static_cast<NetId>(net_names.size());
    net_names.push_back(n);
    name_to_id.emplace(n, id);
    return id;
}

NetId Netlist::find_net(const std::string& n) const {
    auto it = name_to_id.find(n);
    return it == name_to_id.end() ? kNullNet : it->second;
}

NetId Netlist::add_fresh_net(const std::string& stem) {
    if (name_to_id.find(stem) == name_to_id.end()) return add_net(stem);
    for (int i = 0;; ++i) {
        std::string candidate = stem + "_" + std::to_string(i);
        if (name_to_id.find(candidate) == name_to_id.end()) return add_net(candidate);
    }
}

bool Netlist::is_flipflop_q(NetId id) const {
    for (const auto& ff : flipflops)
        if (ff.q == id) return true;
    return false;
}

namespace {

std::size_t required_arity_min(GateKind k) {
    switch (k) {
        case GateKind::Not:
        case GateKind::Buf: return 1;
        case GateKind::Mux2: return 3;
        case GateKind::Const0:
        case GateKind::Const1: return 0;
        default: return 2;
    }
}

std::size_t required_arity_max(GateKind k) {
    switch (k) {
        case GateKind::Not:
        case GateKind::Buf: return 1;
        case GateKind::Mux2: return 3;
        case GateKind::Const0:
        case GateKind::Const1: return 0;
        default: return SIZE_MAX;  // n-ary
    }
}

}  // namespace

void Netlist::validate() const {
    const NetId n = static_cast<NetId>(net_count());
    // driver map: -2 = undriven
    std::vector<int> driver(static_cast<size_t>(n), -2);
    auto claim = [&](NetId id, int tag, const std::string& what) {
        if (id < 0 || id >= n) throw NetlistError("net id out of range in " + what);
        if (driver[static_cast<size_t>(id)] != -2)
            throw NetlistError("multi-driver net '" + net_name(id) + "' (" + what + ")");
        driver[static_cast<size_t>(id)] = tag;
    };
    for (NetId id : inputs) claim(id, -1, "primary input");
    for (NetId id : key_inputs) claim(id, -1, "key input");
    for (const auto& ff : flipflops) claim(ff.q, -1, "flip-flop output");
    for (std::size_t g = 0; g < gates.size(); ++g)
        claim(gates[g].output, static_cast<int>(g), "gate " + gate_kind_name(gates[g].kind));

    for (const auto& g : gates) {
        std::size_t a = g.inputs.size();
        if (a < required_arity_min(g.kind) || a > required_arity_max(g.kind))
            throw NetlistError(std::string("arity error: ") + gate_kind_name(g.kind) + " gate driving '" +
                               net_name(g.output) + "' has " + std::to_string(a) + " input(s)");
        for (NetId in : g.inputs) {
            if (in < 0 || in >= n) throw NetlistError("gate input net id out of range");
            if (driver[static_cast<size_t>(in)] == -2)
                throw NetlistError("undefined net '" + net_name(in) + "' referenced");
        }
    }
    for (const auto& ff : flipflops) {
        if (ff.d < 0 || ff.d >= n || driver[static_cast<size_t>(ff.d)] == -2)
            throw NetlistError("flip-flop '" + net_name(ff.q) + "' has undriven data net");
    }
    for (NetId o : outputs) {
        if (o < 0 || o >= n || driver[static_cast<size_t>(o)] == -2)
            throw NetlistError("primary output '" + (o >= 0 && o < n ? net_name(o) : "?") + "' is undriven");
    }

    // key_inputs and inputs must be disjoint; FF q nets distinct from inputs
    // (already enforced by the single-driver check above, which covers both).

    (void)topo_order();  // throws on combinational cycles
}

std::vector<std::size_t> Netlist::topo_order() const {
    // Kahn over the gate graph with flip-flops cut. Ready gates are processed
    // in ascending gate index so the order is deterministic.
    std::vector<int> driver_gate(net_count(), -1);
    for (std::size_t g = 0; g < gates.size(); ++g) driver_gate[static_cast<size_t>(gates[g].output)] = static_cast<int>(g);

    std::vector<int> pending(gates.size(), 0);
    std::vector<std::vector<int>> fanout(gates.size());
    for (std::size_t g = 0; g < gates.size(); ++g) {
        for (NetId in : gates[g].inputs) {
            int dg = driver_gate[static_cast<size_t>(in)];
            if (dg >= 0) {
                pending[g]++;
                fanout[static_cast<size_t>(dg)].push_back(static_cast<int>(g));
            }
        }
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (std::size_t g = 0; g < gates.size(); ++g)
        if (pending[g] == 0) ready.push(static_cast<int>(g));

    std::vector<std::size_t> order;
    order.reserve(gates.size());
    while (!ready.empty()) {
        int g = ready.top();
        ready.pop();
        order.push_back(static_cast<size_t>(g));
        for (int succ : fanout[static_cast<size_t>(g)])
            if (--pending[static_cast<size_t>(succ)] == 0) ready.push(succ);
    }
    if (order.size() != gates.size()) throw NetlistError("combinational cycle detected");
    return order;
}

CombView comb_view(const Netlist& n) {
    CombView v;
    v.base = &n;
    for (const auto& ff : n.flipflops) {
        v.pseudo_inputs.push_back(ff.q);
        v.pseudo_outputs.push_back(ff.d);
    }
    v.topo = n.topo_order();
    return v;
}

bool structurally_equal(const Netlist& a, const Netlist& b) {
    auto names = [&](const Netlist& nl, const std::vector<NetId>& ids) {
        std::vector<std::string> out;
        out.reserve(ids.size());
        for (NetId id : ids) out.push_back(nl.net_name(id));
        return out;
    };
    if (names(a, a.inputs) != names(b, b.inputs)) return false;
    if (names(a, a.outputs) != names(b, b.outputs)) return false;
    if (names(a, a.key_inputs) != names(b, b.key_inputs)) return false;
    if (a.flipflops.size() != b.flipflops.size()) return false;
    for (std::size_t i = 0; i < a.flipflops.size(); ++i) {
        const auto& fa = a.flipflops[i];
        const auto& fb = b.flipflops[i];
        if (a.net_name(fa.q) != b.net_name(fb.q) || a.net_name(fa.d) != b.net_name(fb.d) || fa.init != fb.init)
            return false;
    }
    if (a.gates.size() != b.gates.size()) return false;
    for (std::size_t i = 0; i < a.gates.size(); ++i) {
        const auto& ga = a.gates[i];
        const auto& gb = b.gates[i];
        if (ga.kind != gb.kind) return false;
        if (a.net_name(ga.output) != b.net_name(gb.output)) return false;
        if (names(a, ga.inputs) != names(b, gb.inputs)) return false;
    }
    return true;
}

}  // namespace fsmlock
