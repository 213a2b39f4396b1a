#include "specalg/textio.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "specalg/errors.hpp"

namespace specalg {

const Spec* SpecFile::find(const std::string& name) const {
    for (const auto& s : specs)
        if (s.name == name) return &s.value;
    return nullptr;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string stripped = line.substr(0, line.find('#'));
    std::istringstream iss(stripped);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct RawTransition {
    std::string kw;  // t, may, must, i, o, h
    std::string src, action, dst;
    int line;
};

struct RawBlock {
    std::string name;
    std::string theory;
    int start_line = 0;
    std::map<std::string, std::pair<std::vector<std::string>, int>> lists;  // kw -> (items, line)
    std::vector<RawTransition> transitions;
    bool inconsistent = false;
};

std::vector<std::string> sorted_unique(std::vector<std::string> v, int line,
                                       const std::string& what) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw ParseError(line, "duplicate " + what);
    return v;
}

int index_of(const std::vector<std::string>& v, const std::string& x, int line,
             const std::string& what) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) throw ParseError(line, "undeclared " + what + " " + x);
    return static_cast<int>(it - v.begin());
}

Spec build_nfa(const RawBlock& b) {
    fa::Nfa n;
    auto get = [&](const std::string& kw, bool required) -> std::pair<std::vector<std::string>, int> {
        auto it = b.lists.find(kw);
        if (it == b.lists.end()) {
            if (required) throw ParseError(b.start_line, "missing " + kw + " declaration");
            return {{}, b.start_line};
        }
        return it->second;
    };
    auto [alpha, al] = get("alphabet", true);
    n.alphabet = sorted_unique(alpha, al, "symbol");
    auto [states, sl] = get("states", true);
    n.states = sorted_unique(states, sl, "state");
    auto [init, il] = get("initial", true);
    for (const auto& s : init) n.initial.insert(index_of(n.states, s, il, "state"));
    auto [acc, cl] = get("accepting", false);
    for (const auto& s : acc) n.accepting.insert(index_of(n.states, s, cl, "state"));
    for (const auto& t : b.transitions) {
        if (t.kw != "t") throw ParseError(t.line, "'" + t.kw + "' transition in nfa block");
        n.transitions.insert({index_of(n.states, t.src, t.line, "state"),
                              index_of(n.alphabet, t.action, t.line, "symbol"),
                              index_of(n.states, t.dst, t.line, "state")});
    }
    if (n.initial.empty()) throw ParseError(il, "empty initial set");
    validate(n);
    return n;
}

Spec build_mts(const RawBlock& b) {
    mts::Mts m;
    auto it = b.lists.find("alphabet");
    if (it == b.lists.end()) throw ParseError(b.start_line, "missing alphabet declaration");
    m.alphabet = sorted_unique(it->second.first, it->second.second, "symbol");
    if (b.inconsistent) {
        m.inconsistent = true;
        if (!b.transitions.empty())
            throw ParseError(b.transitions.front().line, "transition in inconsistent block");
        validate(m);
        return m;
    }
    auto st = b.lists.find("states");
    if (st == b.lists.end()) throw ParseError(b.start_line, "missing states declaration");
    m.states = sorted_unique(st->second.first, st->second.second, "state");
    auto in = b.lists.find("initial");
    if (in == b.lists.end()) throw ParseError(b.start_line, "missing initial declaration");
    for (const auto& s : in->second.first)
        m.initial.insert(index_of(m.states, s, in->second.second, "state"));
    for (const auto& t : b.transitions) {
        if (t.kw != "may" && t.kw != "must")
            throw ParseError(t.line, "'" + t.kw + "' transition in mts block");
        fa::Transition tr{index_of(m.states, t.src, t.line, "state"),
                          index_of(m.alphabet, t.action, t.line, "symbol"),
                          index_of(m.states, t.dst, t.line, "state")};
        m.may.insert(tr);
        if (t.kw == "must") m.must.insert(tr);  // must implies may
    }
    validate(m);
    return m;
}

Spec build_ia(const RawBlock& b) {
    ia::InterfaceAutomaton a;
    auto get = [&](const std::string& kw) -> std::vector<std::string> {
        auto it = b.lists.find(kw);
        if (it == b.lists.end()) return {};
        return sorted_unique(it->second.first, it->second.second, "action");
    };
    a.inputs = get("inputs");
    a.outputs = get("outputs");
    a.internals = get("internals");
    auto st = b.lists.find("states");
    if (st == b.lists.end()) throw ParseError(b.start_line, "missing states declaration");
    a.states = sorted_unique(st->second.first, st->second.second, "state");
    auto in = b.lists.find("initial");
    if (in == b.lists.end()) throw ParseError(b.start_line, "missing initial declaration");
    if (in->second.first.size() != 1)
        throw ParseError(in->second.second, "ia initial must be a single state");
    a.initial = index_of(a.states, in->second.first[0], in->second.second, "state");
    for (const auto& t : b.transitions) {
        const std::vector<std::string>* expected = nullptr;
        if (t.kw == "i") expected = &a.inputs;
        else if (t.kw == "o") expected = &a.outputs;
        else if (t.kw == "h") expected = &a.internals;
        else throw ParseError(t.line, "'" + t.kw + "' transition in ia block");
        index_of(*expected, t.action, t.line, "action");
        ia::Transition tr{index_of(a.states, t.src, t.line, "state"), t.action,
                          index_of(a.states, t.dst, t.line, "state")};
        for (const auto& prev : a.transitions)
            if (prev.src == tr.src && prev.action == tr.action)
                throw ParseError(t.line, "nondeterministic ia transition on " + t.action);
        a.transitions.insert(tr);
    }
    validate(a);
    return a;
}

}  // namespace

SpecFile parse_spec(const std::string& text) {
    SpecFile file;
    std::istringstream iss(text);
    std::string line;
    int lineno = 0;
    RawBlock block;
    bool in_block = false;
    auto expect_args = [&](const std::vector<std::string>& toks, std::size_t n) {
        if (toks.size() != n + 1)
            throw ParseError(lineno, "'" + toks[0] + "' expects " + std::to_string(n) + " argument(s)");
    };
    while (std::getline(iss, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (!in_block) {
            if (kw != "spec") throw ParseError(lineno, "expected 'spec NAME'");
            expect_args(toks, 1);
            block = RawBlock{};
            block.name = toks[1];
            block.start_line = lineno;
            for (const auto& s : file.specs)
                if (s.name == block.name) throw ParseError(lineno, "duplicate name " + block.name);
            in_block = true;
            continue;
        }
        if (kw == "theory") {
            expect_args(toks, 1);
            if (toks[1] != "nfa" && toks[1] != "mts" && toks[1] != "ia")
                throw ParseError(lineno, "unknown theory " + toks[1]);
            block.theory = toks[1];
        } else if (kw == "alphabet" || kw == "states" || kw == "initial" || kw == "accepting" ||
                   kw == "inputs" || kw == "outputs" || kw == "internals") {
            expect_args(toks, 1);
            if (block.lists.count(kw)) throw ParseError(lineno, "repeated " + kw + " line");
            block.lists[kw] = {split_commas(toks[1]), lineno};
        } else if (kw == "t" || kw == "may" || kw == "must" || kw == "i" || kw == "o" ||
                   kw == "h") {
            expect_args(toks, 3);
            block.transitions.push_back({kw, toks[1], toks[2], toks[3], lineno});
        } else if (kw == "inconsistent") {
            expect_args(toks, 0);
            block.inconsistent = true;
        } else if (kw == "end") {
            expect_args(toks, 0);
            if (block.theory.empty()) throw ParseError(lineno, "missing theory line");
            try {
                Spec value = block.theory == "nfa"  ? build_nfa(block)
                             : block.theory == "mts" ? build_mts(block)
                                                     : build_ia(block);
                file.specs.push_back({block.name, std::move(value)});
            } catch (const std::invalid_argument& e) {
                throw ParseError(block.start_line, e.what());
            }
            in_block = false;
        } else {
            throw ParseError(lineno, "unknown keyword " + kw);
        }
    }
    if (in_block) throw ParseError(lineno, "missing end");
    return file;
}

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i];
    }
    return s;
}

// remap indices so declarations come out sorted regardless of how the
// value was constructed (products build states in discovery order)
std::vector<int> sort_permutation(const std::vector<std::string>& names,
                                  std::vector<std::string>& sorted) {
    std::vector<int> order(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return names[a] < names[b]; });
    std::vector<int> remap(names.size());
    sorted.clear();
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        remap[order[pos]] = static_cast<int>(pos);
        sorted.push_back(names[order[pos]]);
    }
    return remap;
}

std::vector<std::string> mapped(const std::set<int>& ids, const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (int i : ids) out.push_back(names[i]);
    std::sort(out.begin(), out.end());
    return out;
}

void render_nfa(std::ostream& os, const fa::Nfa& n) {
    std::vector<std::string> states;
    auto remap = sort_permutation(n.states, states);
    os << "theory nfa\n";
    os << "alphabet " << join(n.alphabet) << "\n";
    os << "states " << join(states) << "\n";
    os << "initial " << join(mapped(n.initial, n.states)) << "\n";
    if (!n.accepting.empty()) os << "accepting " << join(mapped(n.accepting, n.states)) << "\n";
    std::set<std::tuple<std::string, std::string, std::string>> lines;
    for (const auto& t : n.transitions)
        lines.insert({states[remap[t.src]], n.alphabet[t.sym], states[remap[t.dst]]});
    for (const auto& [s, a, d] : lines) os << "t " << s << " " << a << " " << d << "\n";
}

void render_mts(std::ostream& os, const mts::Mts& m) {
    os << "theory mts\n";
    os << "alphabet " << join(m.alphabet) << "\n";
    if (m.inconsistent) {
        os << "inconsistent\n";
        return;
    }
    std::vector<std::string> states;
    auto remap = sort_permutation(m.states, states);
    os << "states " << join(states) << "\n";
    os << "initial " << join(mapped(m.initial, m.states)) << "\n";
    std::set<std::tuple<std::string, std::string, std::string, std::string>> lines;
    for (const auto& t : m.may) {
        const char* kw = m.must.count(t) ? "must" : "may";
        lines.insert({states[remap[t.src]], m.alphabet[t.sym], states[remap[t.dst]], kw});
    }
    for (const auto& [s, a, d, kw] : lines) os << kw << " " << s << " " << a << " " << d << "\n";
}

void render_ia(std::ostream& os, const ia::InterfaceAutomaton& a) {
    std::vector<std::string> states;
    auto remap = sort_permutation(a.states, states);
    os << "theory ia\n";
    if (!a.inputs.empty()) os << "inputs " << join(a.inputs) << "\n";
    if (!a.outputs.empty()) os << "outputs " << join(a.outputs) << "\n";
    if (!a.internals.empty()) os << "internals " << join(a.internals) << "\n";
    os << "states " << join(states) << "\n";
    os << "initial " << a.states[a.initial] << "\n";
    std::set<std::tuple<std::string, std::string, std::string, std::string>> lines;
    for (const auto& t : a.transitions) {
        const char* kw = a.kind(t.action) == ia::Kind::Input    ? "i"
                         : a.kind(t.action) == ia::Kind::Output ? "o"
                                                                : "h";
        lines.insert({states[remap[t.src]], t.action, states[remap[t.dst]], kw});
    }
    for (const auto& [s, x, d, kw] : lines) os << kw << " " << s << " " << x << " " << d << "\n";
}

}  // namespace

std::string render_spec(const Spec& value, const std::string& name) {
    std::ostringstream os;
    os << "spec " << name << "\n";
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, fa::Nfa>) render_nfa(os, v);
            else if constexpr (std::is_same_v<T, mts::Mts>) render_mts(os, v);
            else render_ia(os, v);
        },
        value);
    os << "end\n";
    return os.str();
}

std::string render_file(const SpecFile& file) {
    std::string out;
    for (const auto& s : file.specs) {
        if (!out.empty()) out += "\n";
        out += render_spec(s.value, s.name);
    }
    return out;
}

}  // namespace specalg
