#include "fsmlock/bench_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fsmlock {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char next() {
        char c = text[pos++];
        if (c == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
        return c;
    }
};

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '[' || c == ']' || c == '$' ||
           c == '-';
}

void skip_ws(Cursor& c) {
    while (!c.done()) {
        char ch = c.peek();
        if (ch == '#') {  // comment to end of line
            while (!c.done() && c.peek() != '\n') c.next();
        } else if (ch == ' ' || ch == '\t' || ch == '\r') {
            c.next();
        } else {
            break;
        }
    }
}

std::string read_name(Cursor& c) {
    skip_ws(c);
    std::string s;
    while (!c.done() && is_name_char(c.peek())) s.push_back(c.next());
    if (s.empty()) throw ParseError("expected a net or gate name", c.line, c.col);
    return s;
}

void expect(Cursor& c, char ch) {
    skip_ws(c);
    if (c.done() || c.peek() != ch)
        throw ParseError(std::string("expected '") + ch + "'", c.line, c.col);
    c.next();
}

bool try_consume(Cursor& c, char ch) {
    skip_ws(c);
    if (!c.done() && c.peek() == ch) {
        c.next();
        return true;
    }
    return false;
}

struct RawGate {
    std::string out;
    std::string func;
    std::vector<std::string> args;
    int line;
};

}  // namespace

BenchOptions bench_options_from_json(const std::string& json_text) {
    BenchOptions opts;
    auto j = nlohmann::json::parse(json_text);
    if (j.contains("key_prefix")) opts.key_prefix = j.at("key_prefix").get<std::string>();
    if (j.contains("ff_init"))
        for (auto& [net, bit] : j.at("ff_init").items()) opts.ff_init[net] = bit.get<int>() != 0;
    return opts;
}

Netlist parse_bench(const std::string& text, const BenchOptions& opts) {
    Cursor c{text};
    std::vector<std::string> input_names, output_names;
    std::vector<RawGate> raw;

    while (true) {
        skip_ws(c);
        if (c.done()) break;
        if (c.peek() == '\n') {
            c.next();
            continue;
        }
        int line = c.line;
        std::string head = read_name(c);
        if (head == "INPUT" || head == "OUTPUT") {
            expect(c, '(');
            std::string net = read_name(c);
            expect(c, ')');
            (head == "INPUT" ? input_names : output_names).push_back(net);
            continue;
        }
        // `out = FUNC(arg, ...)` or `out = FUNC` for constants
        expect(c, '=');
        std::string func = read_name(c);
        RawGate g{head, func, {}, line};
        if (try_consume(c, '(')) {
            if (!try_consume(c, ')')) {
                g.args.push_back(read_name(c));
                while (try_consume(c, ',')) g.args.push_back(read_name(c));
                expect(c, ')');
            }
        }
        raw.push_back(std::move(g));
    }

    Netlist n;
    n.name = "bench";
    // Net ids follow declaration order: INPUT lines first, then each
    // statement's nets as they appear.
    for (const auto& nm : input_names) {
        NetId id = n.add_net(nm);
        if (nm.rfind(opts.key_prefix, 0) == 0 && !opts.key_prefix.empty())
            n.key_inputs.push_back(id);
        else
            n.inputs.push_back(id);
    }
    for (const auto& nm : output_names) n.outputs.push_back(n.add_net(nm));
    for (const auto& g : raw) {
        NetId out = n.add_net(g.out);
        if (g.func == "DFF" || g.func == "dff") {
            if (g.args.size() != 1)
                throw ParseError("DFF takes exactly one input", g.line, 1);
            FlipFlop ff;
            ff.q = out;
            ff.d = n.add_net(g.args[0]);
            auto it = opts.ff_init.find(g.out);
            ff.init = it != opts.ff_init.end() && it->second;
            n.flipflops.push_back(ff);
            continue;
        }
        auto kind = gate_kind_from_name(g.func);
        if (!kind) throw ParseError("unknown gate function '" + g.func + "'", g.line, 1);
        Gate gate;
        gate.kind = *kind;
        gate.output = out;
        for (const auto& a : g.args) gate.inputs.push_back(n.add_net(a));
        n.gates.push_back(std::move(gate));
    }

    try {
        n.validate();
    } catch (const NetlistError& e) {
        throw ParseError(e.what(), 0, 0);
    }
    return n;
}

Netlist parse_bench_file(const std::string& path, const BenchOptions& opts) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    Netlist n = parse_bench(ss.str(), opts);
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    n.name = dot == std::string::npos ? base : base.substr(0, dot);
    return n;
}

Netlist expand_mux_gates(const Netlist& n) {
    bool any = false;
    for (const auto& g : n.gates)
        if (g.kind == GateKind::Mux2) any = true;
    if (!any) return n;

    Netlist out = n;
    std::vector<Gate> gates;
    gates.reserve(out.gates.size());
    for (const auto& g : out.gates) {
        if (g.kind != GateKind::Mux2) {
            gates.push_back(g);
            continue;
        }
        const std::string stem = out.net_name(g.output);
        NetId sel_n = out.add_fresh_net(stem + "_mxn");
        NetId arm0 = out.add_fresh_net(stem + "_mx0");
        NetId arm1 = out.add_fresh_net(stem + "_mx1");
        gates.push_back({GateKind::Not, {g.inputs[0]}, sel_n});
        gates.push_back({GateKind::And, {sel_n, g.inputs[1]}, arm0});
        gates.push_back({GateKind::And, {g.inputs[0], g.inputs[2]}, arm1});
        gates.push_back({GateKind::Or, {arm0, arm1}, g.output});
    }
    out.gates = std::move(gates);
    out.validate();
    return out;
}

std::string serialize_bench(const Netlist& n, const SerializeOptions& opts) {
    const Netlist* src = &n;
    Netlist expanded;
    if (opts.expand_mux) {
        expanded = expand_mux_gates(n);
        src = &expanded;
    }
    std::ostringstream os;
    os << "# " << src->name << "\n";
    for (NetId id : src->inputs) os << "INPUT(" << src->net_name(id) << ")\n";
    for (NetId id : src->key_inputs) os << "INPUT(" << src->net_name(id) << ")\n";
    for (NetId id : src->outputs) os << "OUTPUT(" << src->net_name(id) << ")\n";
    for (const auto& ff : src->flipflops) os << src->net_name(ff.q) << " = DFF(" << src->net_name(ff.d) << ")\n";
    for (const auto& g : src->gates) {
        os << src->net_name(g.output) << " = " << gate_kind_name(g.kind) << "(";
        for (std::size_t i = 0; i < g.inputs.size(); ++i) {
            if (i) os << ", ";
            os << src->net_name(g.inputs[i]);
        }
        os << ")\n";
    }
    return os.str();
}

void write_bench_file(const std::string& path, const Netlist& n, const SerializeOptions& opts) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << serialize_bench(n, opts);
}

}  // namespace fsmlock
