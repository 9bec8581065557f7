#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bits.hpp"

namespace nfkit {

struct UniverseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite typed universes: U_0 is a set of atoms, U_{l+1} the powerset of U_l.
// Level l is enumerated canonically: element k of U_{l+1} is the subset of U_l
// whose membership mask is exactly the binary digits of k. Nothing is stored
// per element; the numbering IS the membership structure.
struct Universe {
    std::size_t n_atoms = 0;
    int max_level = 0;                    // deepest enumerated level
    std::size_t budget = 0;
    std::vector<std::size_t> level_size;  // [0 .. max_level]

    [[nodiscard]] std::size_t size(int level) const {
        if (level < 0 || level > max_level)
            throw UniverseError("level " + std::to_string(level) + " is not enumerated (max " +
                                std::to_string(max_level) + ")");
        return level_size[static_cast<std::size_t>(level)];
    }
};

[[nodiscard]] inline Universe build_universe(std::size_t n_atoms, int max_enum_level,
                                             std::size_t budget = std::size_t{1} << 16) {
    Universe u;
    u.n_atoms = n_atoms;
    u.max_level = max_enum_level;
    u.budget = budget;
    u.level_size.push_back(n_atoms);
    if (n_atoms > budget)
        throw UniverseError("level 0 has " + std::to_string(n_atoms) + " atoms, budget is " +
                            std::to_string(budget));
    for (int l = 1; l <= max_enum_level; ++l) {
        std::size_t prev = u.level_size.back();
        if (prev >= 63)
            throw UniverseError("level " + std::to_string(l) + " would need 2^" +
                                std::to_string(prev) + " elements, budget is " + std::to_string(budget));
        std::size_t sz = std::size_t{1} << prev;
        if (sz > budget)
            throw UniverseError("level " + std::to_string(l) + " would need " + std::to_string(sz) +
                                " elements, budget is " + std::to_string(budget));
        u.level_size.push_back(sz);
    }
    return u;
}

// An element of U_level, by its canonical index.
struct Elem {
    int level = 0;
    std::size_t idx = 0;
    friend bool operator==(const Elem&, const Elem&) = default;
};

// A set value: level >= 1, membership bits over U_{level-1}. Values one level
// past the enumerated maximum are representable (their base is enumerated even
// though they themselves have no index).
struct SetVal {
    int level = 1;
    Bits bits;
    friend bool operator==(const SetVal& a, const SetVal& b) {
        return a.level == b.level && a.bits == b.bits;
    }
    friend bool operator!=(const SetVal& a, const SetVal& b) { return !(a == b); }
    friend bool operator<(const SetVal& a, const SetVal& b) {
        if (a.level != b.level) return a.level < b.level;
        return a.bits < b.bits;
    }
    [[nodiscard]] std::size_t card() const { return bits.count(); }
    [[nodiscard]] bool empty() const { return bits.none(); }
};

inline SetVal empty_set(const Universe& u, int level) {
    if (level < 1 || level > u.max_level + 1)
        throw UniverseError("no sets at level " + std::to_string(level) +
                            " (representable levels are 1 to " + std::to_string(u.max_level + 1) + ")");
    return {level, Bits(u.size(level - 1))};
}

inline SetVal full_set(const Universe& u, int level) {
    SetVal s = empty_set(u, level);
    for (std::size_t i = 0; i < u.size(level - 1); ++i) s.bits.set(i);
    return s;
}

// Bit pattern of the index, spread over the base of the next level up.
inline SetVal expand(const Universe& u, Elem e) {
    if (e.level < 1) throw UniverseError("atoms do not expand to sets");
    SetVal s = empty_set(u, e.level);
    std::size_t v = e.idx;
    for (std::size_t b = 0; v; ++b, v >>= 1)
        if (v & 1) s.bits.set(b);
    return s;
}

inline std::size_t index_of(const Universe& u, const SetVal& s) {
    if (s.level > u.max_level)
        throw UniverseError("level " + std::to_string(s.level) +
                            " sets have no index (enumeration stops at level " +
                            std::to_string(u.max_level) + ")");
    return s.bits.to_uint();
}

inline Elem elem_of(const Universe& u, const SetVal& s) { return {s.level, index_of(u, s)}; }

[[nodiscard]] inline std::vector<Elem> members(const SetVal& s) {
    std::vector<Elem> out;
    out.reserve(s.card());
    s.bits.for_each_set([&](std::size_t j) { out.push_back({s.level - 1, j}); });
    return out;
}

inline bool contains(const SetVal& s, Elem e) {
    return e.level == s.level - 1 && s.bits.get(e.idx);
}

// --- constructors -------------------------------------------------------

inline SetVal mk_singleton(const Universe& u, Elem x) {
    SetVal s = empty_set(u, x.level + 1);
    s.bits.set(x.idx);
    return s;
}
inline SetVal mk_singleton(const Universe& u, const SetVal& x) {
    return mk_singleton(u, elem_of(u, x));
}

inline SetVal mk_upair(const Universe& u, Elem x, Elem y) {
    if (x.level != y.level) throw UniverseError("unordered pair needs same-level elements");
    SetVal s = empty_set(u, x.level + 1);
    s.bits.set(x.idx);
    s.bits.set(y.idx);
    return s;
}

// <x,y> = {{x},{x,y}}, two levels up
inline SetVal mk_opair(const Universe& u, Elem x, Elem y) {
    Elem sx = elem_of(u, mk_singleton(u, x));
    Elem pxy = elem_of(u, mk_upair(u, x, y));
    return mk_upair(u, sx, pxy);
}

// <x,y,z> = <<x,y>, {{z}}>, four levels up
inline SetVal mk_otriple(const Universe& u, Elem x, Elem y, Elem z) {
    Elem p = elem_of(u, mk_opair(u, x, y));
    Elem sz = elem_of(u, mk_singleton(u, mk_singleton(u, z)));
    return mk_opair(u, p, sz);
}

[[nodiscard]] inline std::optional<std::pair<Elem, Elem>> decode_opair(const Universe& u, const SetVal& p) {
    if (p.level < 2) return std::nullopt;
    auto ms = members(p);
    if (ms.empty() || ms.size() > 2) return std::nullopt;
    if (ms.size() == 1) {
        // {{x}} only decodes when the sole member is a singleton: <x,x>
        SetVal m = expand(u, ms[0]);
        if (m.card() != 1) return std::nullopt;
        Elem x = members(m)[0];
        return std::pair{x, x};
    }
    SetVal a = expand(u, ms[0]), b = expand(u, ms[1]);
    if (a.card() > b.card()) std::swap(a, b);
    if (a.card() != 1 || b.card() != 2) return std::nullopt;
    Elem x = members(a)[0];
    auto bs = members(b);
    if (!contains(b, x)) return std::nullopt;
    Elem y = bs[0] == x ? bs[1] : bs[0];
    return std::pair{x, y};
}

[[nodiscard]] inline std::optional<std::array<Elem, 3>> decode_otriple(const Universe& u, const SetVal& t) {
    auto outer = decode_opair(u, t);
    if (!outer) return std::nullopt;
    SetVal left = expand(u, outer->first);    // should be <x,y>
    SetVal right = expand(u, outer->second);  // should be {{z}}
    auto xy = decode_opair(u, left);
    if (!xy) return std::nullopt;
    if (right.card() != 1) return std::nullopt;
    SetVal inner = expand(u, members(right)[0]);
    if (inner.card() != 1) return std::nullopt;
    Elem z = members(inner)[0];
    return std::array<Elem, 3>{xy->first, xy->second, z};
}

// --- set algebra --------------------------------------------------------

namespace detail {
inline void same_level(const SetVal& a, const SetVal& b, const char* op) {
    if (a.level != b.level)
        throw UniverseError(std::string(op) + " needs same-level operands");
}
} // namespace detail

inline SetVal set_union(const SetVal& a, const SetVal& b) {
    detail::same_level(a, b, "union");
    return {a.level, a.bits | b.bits};
}
inline SetVal set_inter(const SetVal& a, const SetVal& b) {
    detail::same_level(a, b, "intersection");
    return {a.level, a.bits & b.bits};
}
inline SetVal set_diff(const SetVal& a, const SetVal& b) {
    detail::same_level(a, b, "difference");
    return {a.level, diff(a.bits, b.bits)};
}
inline bool subset(const SetVal& a, const SetVal& b) {
    detail::same_level(a, b, "subset");
    return a.bits.subset_of(b.bits);
}

inline SetVal big_union(const Universe& u, const SetVal& s) {
    if (s.level < 2) throw UniverseError("bigunion needs a set of sets");
    SetVal out = empty_set(u, s.level - 1);
    for (auto m : members(s)) out = set_union(out, expand(u, m));
    return out;
}

inline SetVal adjoin(const Universe& u, const SetVal& s, Elem x) {
    SetVal out = s;
    if (x.level != s.level - 1) throw UniverseError("adjoin level mismatch");
    out.bits.set(x.idx);
    return out;
}

// USC(a): the set of singletons of members of a, one level up.
inline SetVal usc(const Universe& u, const SetVal& a) {
    SetVal out = empty_set(u, a.level + 1);
    a.bits.for_each_set([&](std::size_t j) { out.bits.set(std::size_t{1} << j); });
    return out;
}

// SSC(a): all subsets of a. The separability clause of the source definition
// (b = u along with b minus u) holds for every subset here, so this coincides
// with the full powerset restricted to a.
inline SetVal ssc(const Universe& u, const SetVal& a) {
    std::vector<std::size_t> js;
    a.bits.for_each_set([&](std::size_t j) { js.push_back(j); });
    if (js.size() >= 63) throw UniverseError("ssc of a set with " + std::to_string(js.size()) + " members");
    SetVal out = empty_set(u, a.level + 1);
    for (std::size_t mask = 0; mask < (std::size_t{1} << js.size()); ++mask) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < js.size(); ++i)
            if (mask & (std::size_t{1} << i)) idx |= std::size_t{1} << js[i];
        out.bits.set(idx);
    }
    return out;
}

// SC(a) is SSC(a) restricted to separable subsets; separability is vacuous in
// a two-valued model, so the two coincide. Kept as its own entry point.
inline SetVal sc(const Universe& u, const SetVal& a) { return ssc(u, a); }

// --- relations and maps -------------------------------------------------

// A function graph abstracted to index pairs over U_elem_level. Used both for
// decoded SetVal graphs and for similarity witnesses at levels whose pair sets
// are not representable.
struct PairFn {
    int elem_level = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    bool all_members_were_pairs = true;   // false when the source set had junk members
};

[[nodiscard]] inline PairFn decode_graph(const Universe& u, const SetVal& f) {
    if (f.level < 3) throw UniverseError("a pair graph lives at least at level 3");
    PairFn out;
    out.elem_level = f.level - 3;
    for (auto m : members(f)) {
        auto p = decode_opair(u, expand(u, m));
        if (p) out.pairs.push_back({p->first.idx, p->second.idx});
        else out.all_members_were_pairs = false;
    }
    return out;
}

[[nodiscard]] inline bool is_function(const PairFn& f) {
    if (!f.all_members_were_pairs) return false;
    for (std::size_t i = 0; i < f.pairs.size(); ++i)
        for (std::size_t k = i + 1; k < f.pairs.size(); ++k)
            if (f.pairs[i].first == f.pairs[k].first && f.pairs[i].second != f.pairs[k].second)
                return false;
    return true;
}
[[nodiscard]] inline bool is_function(const Universe& u, const SetVal& f) {
    return is_function(decode_graph(u, f));
}

// f maps X into Y: every x in X has exactly one image, and it lies in Y.
[[nodiscard]] inline bool maps_into(const PairFn& f, const SetVal& x, const SetVal& y) {
    bool ok = true;
    x.bits.for_each_set([&](std::size_t a) {
        int hits = 0;
        std::size_t img = 0;
        for (auto& [p, q] : f.pairs)
            if (p == a) { ++hits; img = q; }
        if (hits != 1 || !y.bits.get(img)) ok = false;
    });
    return ok;
}

// One-to-one from X to Y, including the side condition that pairs landing in Y
// start in X.
[[nodiscard]] inline bool is_one_one(const PairFn& f, const SetVal& x, const SetVal& y) {
    if (!maps_into(f, x, y)) return false;
    for (auto& [p, q] : f.pairs)
        if (y.bits.get(q) && !x.bits.get(p)) return false;
    for (auto& [p1, q1] : f.pairs)
        for (auto& [p2, q2] : f.pairs)
            if (q1 == q2 && p1 != p2 && x.bits.get(p1) && x.bits.get(p2)) return false;
    return true;
}
[[nodiscard]] inline bool is_one_one(const Universe& u, const SetVal& f, const SetVal& x, const SetVal& y) {
    return is_one_one(decode_graph(u, f), x, y);
}

[[nodiscard]] inline bool is_onto(const PairFn& f, const SetVal& x, const SetVal& y) {
    bool ok = true;
    y.bits.for_each_set([&](std::size_t b) {
        bool hit = false;
        for (auto& [p, q] : f.pairs)
            if (q == b && x.bits.get(p)) hit = true;
        if (!hit) ok = false;
    });
    return ok;
}
[[nodiscard]] inline bool is_onto(const Universe& u, const SetVal& f, const SetVal& x, const SetVal& y) {
    return is_onto(decode_graph(u, f), x, y);
}

// --- products, images, application --------------------------------------

inline SetVal product(const Universe& u, const SetVal& a, const SetVal& b) {
    detail::same_level(a, b, "product");
    SetVal out = empty_set(u, a.level + 2);
    for (auto x : members(a))
        for (auto y : members(b))
            out.bits.set(index_of(u, mk_opair(u, x, y)));
    return out;
}

// f``a: the values f takes on arguments in a (range of f cut down to a x V).
inline SetVal image(const Universe& u, const SetVal& f, const SetVal& a) {
    if (f.level != a.level + 2) throw UniverseError("image needs the graph two levels above its argument set");
    SetVal out = empty_set(u, a.level);
    for (auto m : members(f)) {
        auto p = decode_opair(u, expand(u, m));
        if (p && a.bits.get(p->first.idx)) out.bits.set(p->second.idx);
    }
    return out;
}

inline SetVal graph_dom(const Universe& u, const SetVal& f) {
    SetVal out = empty_set(u, f.level - 2);
    for (auto m : members(f)) {
        auto p = decode_opair(u, expand(u, m));
        if (p) out.bits.set(p->first.idx);
    }
    return out;
}
inline SetVal graph_range(const Universe& u, const SetVal& f) {
    SetVal out = empty_set(u, f.level - 2);
    for (auto m : members(f)) {
        auto p = decode_opair(u, expand(u, m));
        if (p) out.bits.set(p->second.idx);
    }
    return out;
}

// Ap(f,x): union of everything f relates x to. Well defined for any set f.
inline SetVal ap(const Universe& u, const SetVal& f, Elem x) {
    if (f.level - 3 < 1) throw UniverseError("ap needs function values that are sets");
    SetVal out = empty_set(u, f.level - 3);
    for (auto m : members(f)) {
        auto p = decode_opair(u, expand(u, m));
        if (p && p->first == x) out = set_union(out, expand(u, {out.level, p->second.idx}));
    }
    return out;
}

// --- similarity ---------------------------------------------------------

// Equinumerosity. In a finite two-valued universe a bijection exists exactly
// when the member counts agree; the witness below is built and then re-checked
// against the mapping clauses, not assumed.
[[nodiscard]] inline bool similar(const SetVal& a, const SetVal& b) {
    return a.card() == b.card();
}

[[nodiscard]] inline bool validate_bijection(const PairFn& w, const SetVal& a, const SetVal& b) {
    if (w.elem_level != a.level - 1 || a.level != b.level) return false;
    if (!is_function(w)) return false;
    if (!maps_into(w, a, b)) return false;
    if (!is_one_one(w, a, b)) return false;
    if (!is_onto(w, a, b)) return false;
    for (auto& [p, q] : w.pairs)
        if (!a.bits.get(p) || !b.bits.get(q)) return false;
    return true;
}

[[nodiscard]] inline std::optional<PairFn> similarity_witness(const SetVal& a, const SetVal& b) {
    if (a.level != b.level || a.card() != b.card()) return std::nullopt;
    PairFn w;
    w.elem_level = a.level - 1;
    std::vector<std::size_t> as, bs;
    a.bits.for_each_set([&](std::size_t j) { as.push_back(j); });
    b.bits.for_each_set([&](std::size_t j) { bs.push_back(j); });
    for (std::size_t i = 0; i < as.size(); ++i) w.pairs.push_back({as[i], bs[i]});
    if (!validate_bijection(w, a, b)) return std::nullopt;
    return w;
}

// --- finiteness and decidability -----------------------------------------

// Least class containing the empty set and closed under adjoining one new
// member. At enumerated levels the fixpoint is computed outright; one level
// past enumeration the adjunction chain toward s is built member by member,
// each step an instance of the closure rule.
[[nodiscard]] inline bool is_finite(const Universe& u, const SetVal& s) {
    if (s.level <= u.max_level) {
        std::size_t total = u.size(s.level);
        std::vector<char> fin(total, 0);
        std::deque<std::size_t> q;
        fin[0] = 1;
        q.push_back(0);
        std::size_t base = u.size(s.level - 1);
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop_front();
            for (std::size_t z = 0; z < base; ++z) {
                if (v & (std::size_t{1} << z)) continue;
                std::size_t w = v | (std::size_t{1} << z);
                if (!fin[w]) { fin[w] = 1; q.push_back(w); }
            }
        }
        return fin[index_of(u, s)] != 0;
    }
    SetVal cur = empty_set(u, s.level);
    bool ok = true;
    s.bits.for_each_set([&](std::size_t z) {
        if (cur.bits.get(z)) ok = false;    // cannot happen; keeps the rule honest
        cur.bits.set(z);
    });
    return ok && cur == s;
}

// Membership in s is decidable: every candidate is in or out. Trivial here,
// checked by running the quantifier anyway.
[[nodiscard]] inline bool has_dec_eq(const Universe& u, const SetVal& s) {
    for (std::size_t j = 0; j < u.size(s.level - 1); ++j) {
        bool in = s.bits.get(j);
        bool out = !s.bits.get(j);
        if (!(in || out)) return false;
    }
    return true;
}

// A proper subset equinumerous with s. Searched outright for small s; larger
// sets fall back to the counting argument (a proper subset has strictly fewer
// members, so no bijection exists).
[[nodiscard]] inline bool is_dedekind_infinite(const Universe& u, const SetVal& s) {
    (void)u;
    std::vector<std::size_t> js;
    s.bits.for_each_set([&](std::size_t j) { js.push_back(j); });
    if (js.size() > 20) return false;
    for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << js.size()); ++mask) {
        SetVal b{s.level, Bits(s.bits.width())};
        for (std::size_t i = 0; i < js.size(); ++i)
            if (mask & (std::size_t{1} << i)) b.bits.set(js[i]);
        if (b != s && similar(b, s)) return true;
    }
    return false;
}

// --- text form ----------------------------------------------------------

namespace detail {

inline std::string render_inner(const Universe& u, const SetVal& s) {
    std::vector<std::string> parts;
    for (auto m : members(s)) {
        if (m.level == 0) parts.push_back(std::to_string(m.idx));
        else parts.push_back(render_inner(u, expand(u, m)));
    }
    if (parts.empty()) return "{}";
    std::string out = "{ ";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    out += " }";
    return out;
}

} // namespace detail

[[nodiscard]] inline std::string render_setval(const Universe& u, const SetVal& s) {
    return std::to_string(s.level) + ":" + detail::render_inner(u, s);
}

namespace detail {

struct SetvalParser {
    const Universe& u;
    std::string_view src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
    }
    [[noreturn]] void fail(const std::string& m) const {
        throw UniverseError("set text: " + m + " at offset " + std::to_string(pos));
    }
    char peek() {
        skip_ws();
        if (pos >= src.size()) fail("unexpected end");
        return src[pos];
    }

    std::size_t number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoull(std::string(src.substr(start, pos - start)));
    }

    SetVal set_at(int level) {
        skip_ws();
        if (peek() != '{') fail("expected '{'");
        ++pos;
        SetVal out = empty_set(u, level);
        skip_ws();
        if (peek() == '}') { ++pos; return out; }
        while (true) {
            if (level == 1) {
                std::size_t a = number();
                if (a >= u.size(0)) fail("atom index out of range");
                out.bits.set(a);
            } else {
                SetVal m = set_at(level - 1);
                out.bits.set(index_of(u, m));
            }
            skip_ws();
            if (peek() == ',') { ++pos; continue; }
            if (peek() == '}') { ++pos; return out; }
            fail("expected ',' or '}'");
        }
    }
};

} // namespace detail

[[nodiscard]] inline SetVal parse_setval(const Universe& u, std::string_view text) {
    detail::SetvalParser p{u, text};
    std::size_t level = p.number();
    if (p.peek() != ':') p.fail("expected ':' after level");
    ++p.pos;
    if (level < 1 || static_cast<int>(level) > u.max_level + 1) p.fail("level out of range");
    auto s = p.set_at(static_cast<int>(level));
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return s;
}

} // namespace nfkit
