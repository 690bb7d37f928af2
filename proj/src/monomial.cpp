#include "planar/monomial.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <utility>

namespace planar {

namespace {

struct NodeData {
    std::vector<Monomial> children;
    int deg_x = 0;
    int deg_y = 0;
    std::string encoding;
    std::string orbit_key;
};

struct Interner {
    // deque keeps node addresses stable under growth; the map keys view
    // strings owned by the nodes themselves.
    std::deque<NodeData> nodes;
    std::unordered_map<std::string_view, std::uint32_t> by_encoding;
    std::mutex mutex;

    Interner() {
        add(NodeData{{}, 0, 0, "1", "1"});
        add(NodeData{{}, 1, 0, "x", "x"});
        add(NodeData{{}, 0, 1, "y", "y"});
    }

    std::uint32_t add(NodeData data) {
        nodes.push_back(std::move(data));
        auto id = static_cast<std::uint32_t>(nodes.size() - 1);
        by_encoding.emplace(nodes.back().encoding, id);
        return id;
    }
};

Interner& interner() {
    static Interner instance;
    return instance;
}

const NodeData& node(std::uint32_t id) {
    return interner().nodes[id];
}

std::string orbit_key_for(std::span<const Monomial> children) {
    std::vector<std::pair<int, std::string_view>> keys;
    keys.reserve(children.size());
    for (Monomial c : children)
        keys.emplace_back(c.deg(), std::string_view(c.orbit_key()));
    std::sort(keys.begin(), keys.end());
    std::string out = "(";
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i) out += ',';
        out += keys[i].second;
    }
    out += ')';
    return out;
}

std::uint32_t intern_node(std::vector<Monomial> children) {
    std::string enc = "(";
    int dx = 0;
    int dy = 0;
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) enc += ',';
        enc += children[i].encoding();
        dx += children[i].deg_x();
        dy += children[i].deg_y();
    }
    enc += ')';

    Interner& in = interner();
    std::lock_guard<std::mutex> lock(in.mutex);
    auto it = in.by_encoding.find(enc);
    if (it != in.by_encoding.end()) return it->second;
    std::string orbit = orbit_key_for(children);
    return in.add(NodeData{std::move(children), dx, dy, std::move(enc), std::move(orbit)});
}

} // namespace

Monomial Monomial::unit() { return Monomial(0); }
Monomial Monomial::var_x() { return Monomial(1); }
Monomial Monomial::var_y() { return Monomial(2); }

Monomial Monomial::leaf(Label l) {
    return l == Label::x ? var_x() : var_y();
}

Label Monomial::leaf_label() const {
    if (id_ == 1) return Label::x;
    if (id_ == 2) return Label::y;
    throw Error("leaf_label: not a leaf");
}

std::span<const Monomial> Monomial::children() const {
    return node(id_).children;
}

int Monomial::deg_x() const { return node(id_).deg_x; }
int Monomial::deg_y() const { return node(id_).deg_y; }

const std::string& Monomial::encoding() const { return node(id_).encoding; }
const std::string& Monomial::orbit_key() const { return node(id_).orbit_key; }

bool MonomialOrder::operator()(Monomial a, Monomial b) const {
    int da = a.deg();
    int db = b.deg();
    if (da != db) return da < db;
    return a.encoding() < b.encoding();
}

Monomial graft(std::span<const Monomial> args) {
    if (args.size() < 2)
        throw ArityError("graft: arity must be at least 2");
    std::vector<Monomial> kept;
    kept.reserve(args.size());
    for (Monomial a : args)
        if (!a.is_unit()) kept.push_back(a);
    if (kept.empty()) return Monomial::unit();
    if (kept.size() == 1) return kept.front();
    return Monomial(intern_node(std::move(kept)));
}

Monomial graft(std::initializer_list<Monomial> args) {
    return graft(std::span<const Monomial>(args.begin(), args.size()));
}

std::vector<std::vector<Monomial>> decompositions(Monomial s, int m) {
    if (m < 2)
        throw ArityError("decompositions: arity must be at least 2");
    std::vector<std::vector<Monomial>> out;
    if (s.is_unit()) {
        out.emplace_back(m, Monomial::unit());
        return out;
    }
    // s in one slot, units elsewhere.
    for (int i = 0; i < m; ++i) {
        std::vector<Monomial> tuple(m, Monomial::unit());
        tuple[static_cast<std::size_t>(i)] = s;
        out.push_back(std::move(tuple));
    }
    // When the root has arity r <= m, the children themselves fill r of the
    // m slots in order, units in the rest.
    auto children = s.children();
    int r = static_cast<int>(children.size());
    if (r >= 2 && r <= m) {
        std::vector<int> slots(r);
        for (int i = 0; i < r; ++i) slots[i] = i;
        while (true) {
            std::vector<Monomial> tuple(m, Monomial::unit());
            for (int i = 0; i < r; ++i)
                tuple[static_cast<std::size_t>(slots[i])] = children[static_cast<std::size_t>(i)];
            out.push_back(std::move(tuple));
            // next increasing r-subset of {0..m-1}
            int i = r - 1;
            while (i >= 0 && slots[i] == m - r + i) --i;
            if (i < 0) break;
            ++slots[i];
            for (int j = i + 1; j < r; ++j) slots[j] = slots[j - 1] + 1;
        }
    }
    return out;
}

namespace {

int leaf_count(Monomial s) { return s.deg(); }

// Rebuilds s with leaf index target (1-based over the whole tree) transformed;
// erase relabels to unit() as a marker, handled by graft absorption, except
// that a vertex left with one child must splice, which graft also handles.
Monomial rewrite_leaf(Monomial s, int& countdown, bool erase, Label l) {
    if (s.is_leaf()) {
        if (--countdown == 0)
            return erase ? Monomial::unit() : Monomial::leaf(l);
        return s;
    }
    auto children = s.children();
    std::vector<Monomial> rebuilt;
    rebuilt.reserve(children.size());
    bool changed = false;
    for (Monomial c : children) {
        if (countdown > 0 && countdown <= leaf_count(c)) {
            Monomial r = rewrite_leaf(c, countdown, erase, l);
            rebuilt.push_back(r);
            changed = changed || r != c;
        } else {
            countdown -= leaf_count(c);
            rebuilt.push_back(c);
        }
    }
    if (!changed) return s;
    return graft(std::span<const Monomial>(rebuilt));
}

} // namespace

Monomial delete_leaf_and_reduce(Monomial s, int i) {
    if (i < 1 || i > leaf_count(s))
        throw IndexError("delete_leaf_and_reduce: leaf index out of range");
    int countdown = i;
    return rewrite_leaf(s, countdown, true, Label::x);
}

Monomial relabel_leaf(Monomial s, int i, Label l) {
    if (i < 1 || i > leaf_count(s))
        throw IndexError("relabel_leaf: leaf index out of range");
    int countdown = i;
    return rewrite_leaf(s, countdown, false, l);
}

namespace {

// All ordered ways to write n as k parts each >= 1.
void compositions_into(int n, int k, std::vector<int>& parts,
                       std::vector<std::vector<int>>& out) {
    if (k == 1) {
        parts.push_back(n);
        out.push_back(parts);
        parts.pop_back();
        return;
    }
    for (int first = 1; first <= n - (k - 1); ++first) {
        parts.push_back(first);
        compositions_into(n - first, k - 1, parts, out);
        parts.pop_back();
    }
}

void cross_product(const std::vector<std::vector<Monomial>>& choices,
                   std::size_t depth, std::vector<Monomial>& tuple,
                   std::vector<Monomial>& out) {
    if (depth == choices.size()) {
        out.push_back(graft(std::span<const Monomial>(tuple)));
        return;
    }
    for (Monomial m : choices[depth]) {
        tuple.push_back(m);
        cross_product(choices, depth + 1, tuple, out);
        tuple.pop_back();
    }
}

} // namespace

std::vector<Monomial> enumerate_monomials(int n, const std::vector<Label>& labels) {
    if (n < 0) throw Error("enumerate_monomials: negative degree");
    if (n == 0) return {Monomial::unit()};
    std::vector<Monomial> out;
    if (n == 1) {
        for (Label l : labels) out.push_back(Monomial::leaf(l));
    } else {
        for (int arity = 2; arity <= n; ++arity) {
            std::vector<std::vector<int>> comps;
            std::vector<int> parts;
            compositions_into(n, arity, parts, comps);
            for (const auto& comp : comps) {
                std::vector<std::vector<Monomial>> choices;
                choices.reserve(comp.size());
                for (int part : comp)
                    choices.push_back(enumerate_monomials(part, labels));
                std::vector<Monomial> tuple;
                cross_product(choices, 0, tuple, out);
            }
        }
    }
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

namespace {

void orbit_variants(Monomial s, std::vector<Monomial>& out);

// All tuples obtainable by permuting the children and replacing each child by
// one of its own variants.
void orbit_tuples(const std::vector<std::vector<Monomial>>& variants,
                  std::vector<bool>& used, std::vector<Monomial>& tuple,
                  std::vector<Monomial>& out) {
    if (tuple.size() == variants.size()) {
        out.push_back(graft(std::span<const Monomial>(tuple)));
        return;
    }
    for (std::size_t i = 0; i < variants.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        for (Monomial v : variants[i]) {
            tuple.push_back(v);
            orbit_tuples(variants, used, tuple, out);
            tuple.pop_back();
        }
        used[i] = false;
    }
}

void orbit_variants(Monomial s, std::vector<Monomial>& out) {
    if (!s.is_node()) {
        out.push_back(s);
        return;
    }
    std::vector<std::vector<Monomial>> variants;
    for (Monomial c : s.children()) {
        std::vector<Monomial> v;
        orbit_variants(c, v);
        variants.push_back(std::move(v));
    }
    std::vector<bool> used(variants.size(), false);
    std::vector<Monomial> tuple;
    orbit_tuples(variants, used, tuple, out);
}

} // namespace

std::vector<Monomial> orbit_sum(Monomial s) {
    std::vector<Monomial> out;
    orbit_variants(s, out);
    std::sort(out.begin(), out.end(), MonomialOrder{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

Monomial parse_encoding(std::string_view text, std::size_t& pos);

Monomial parse_group(std::string_view text, std::size_t& pos) {
    // pos sits on '('
    ++pos;
    std::vector<Monomial> children;
    while (true) {
        Monomial c = parse_encoding(text, pos);
        if (c.is_unit())
            throw SyntaxError("unit cannot appear as a child", pos);
        children.push_back(c);
        if (pos >= text.size())
            throw SyntaxError("unterminated group", pos);
        if (text[pos] == ',') {
            ++pos;
            continue;
        }
        if (text[pos] == ')') {
            ++pos;
            break;
        }
        throw SyntaxError("expected ',' or ')'", pos);
    }
    if (children.size() < 2)
        throw SyntaxError("group needs at least two children", pos);
    return graft(std::span<const Monomial>(children));
}

Monomial parse_encoding(std::string_view text, std::size_t& pos) {
    if (pos >= text.size())
        throw SyntaxError("unexpected end of encoding", pos);
    char c = text[pos];
    if (c == '1') {
        ++pos;
        return Monomial::unit();
    }
    if (c == 'x') {
        ++pos;
        return Monomial::var_x();
    }
    if (c == 'y') {
        ++pos;
        return Monomial::var_y();
    }
    if (c == '(') return parse_group(text, pos);
    throw SyntaxError("unexpected character in encoding", pos);
}

} // namespace

Monomial Monomial::from_encoding(std::string_view text) {
    std::size_t pos = 0;
    Monomial m = parse_encoding(text, pos);
    if (pos != text.size())
        throw SyntaxError("trailing characters after encoding", pos);
    return m;
}

} // namespace planar
