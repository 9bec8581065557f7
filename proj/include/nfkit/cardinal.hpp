#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "universe.hpp"

namespace nfkit {

// Size summary of a cardinal: either the shared member count or OVERFLOW (the
// empty cardinal, which is what saturated arithmetic produces).
struct SymCardinal {
    int level = 2;
    bool overflow = false;
    std::size_t size = 0;
    friend bool operator==(const SymCardinal&, const SymCardinal&) = default;
};

[[nodiscard]] inline std::string to_string(const SymCardinal& c) {
    if (c.overflow) return "C(level=" + std::to_string(c.level) + ", OVERFLOW)";
    return "C(level=" + std::to_string(c.level) + ", size=" + std::to_string(c.size) + ")";
}

// Deliberate defect switches for the sensitivity checks: each one removes a
// guard the laws genuinely depend on.
enum class Mutation { none, add_drop_disjoint, fclosure_drop_inhabited };

struct MulGraph {
    int level = 2;
    std::vector<SetVal> values;                       // triple coordinates index into this
    std::vector<std::array<std::size_t, 3>> triples;  // <x,y,z> as value indices
    [[nodiscard]] bool has(std::size_t x, std::size_t y, std::size_t z) const {
        for (auto& t : triples)
            if (t[0] == x && t[1] == y && t[2] == z) return true;
        return false;
    }
};

// Cardinal arithmetic over one home level of one universe. Cardinals are sets
// of equal-sized sets one level down; arithmetic is total, with the empty set
// playing the role of every overflowed value.
class Arith {
public:
    Arith(const Universe& u, int level, Mutation mutation = Mutation::none)
        : u_(u), level_(level), mutation_(mutation) {
        if (level < 2 || level > u.max_level + 1)
            throw UniverseError("cardinal home level " + std::to_string(level) +
                                " outside 2.." + std::to_string(u.max_level + 1));
    }

    [[nodiscard]] const Universe& universe() const { return u_; }
    [[nodiscard]] int level() const { return level_; }
    [[nodiscard]] Mutation mutation() const { return mutation_; }

    // Largest possible member size: members are subsets of U_{level-2}.
    [[nodiscard]] std::size_t member_capacity() const { return u_.size(level_ - 2); }

    [[nodiscard]] SetVal lambda() const { return empty_set(u_, level_); }

    // zero = {Lambda}
    [[nodiscard]] SetVal zero() const {
        SetVal s = lambda();
        s.bits.set(0);
        return s;
    }

    // k+ = { x : some z in k and a not in z have x = z with a adjoined }
    [[nodiscard]] SetVal succ(const SetVal& k) const {
        check_home(k, "succ");
        SetVal out = lambda();
        k.bits.for_each_set([&](std::size_t z) {
            for (std::size_t a = 0; a < member_capacity(); ++a) {
                if (z & (std::size_t{1} << a)) continue;
                out.bits.set(z | (std::size_t{1} << a));
            }
        });
        return out;
    }

    // x+y = { w : u in x, v in y, u and v disjoint, w their union }
    [[nodiscard]] SetVal add(const SetVal& x, const SetVal& y) const {
        check_home(x, "add");
        check_home(y, "add");
        SetVal out = lambda();
        x.bits.for_each_set([&](std::size_t ui) {
            y.bits.for_each_set([&](std::size_t vi) {
                if (mutation_ != Mutation::add_drop_disjoint && (ui & vi) != 0) return;
                out.bits.set(ui | vi);
            });
        });
        return out;
    }

    // Least class containing zero and closed under inhabited successor.
    [[nodiscard]] const std::vector<SetVal>& fcard() const {
        if (!fcard_) {
            std::vector<SetVal> out{zero()};
            while (true) {
                SetVal next = succ(out.back());
                if (mutation_ != Mutation::fclosure_drop_inhabited && next.empty()) break;
                if (std::find(out.begin(), out.end(), next) != out.end()) break;
                out.push_back(next);
            }
            fcard_ = std::move(out);
        }
        return *fcard_;
    }

    // Least class containing zero and closed under successor, inhabited or not.
    [[nodiscard]] const std::vector<SetVal>& semifinite() const {
        if (!semifinite_) {
            std::vector<SetVal> out{zero()};
            while (true) {
                SetVal next = succ(out.back());
                if (std::find(out.begin(), out.end(), next) != out.end()) break;
                out.push_back(next);
            }
            semifinite_ = std::move(out);
        }
        return *semifinite_;
    }

    [[nodiscard]] bool in_fcard(const SetVal& k) const {
        const auto& f = fcard();
        return std::find(f.begin(), f.end(), k) != f.end();
    }
    [[nodiscard]] bool in_semifinite(const SetVal& k) const {
        const auto& f = semifinite();
        return std::find(f.begin(), f.end(), k) != f.end();
    }

    // k <= m: some a in k extends to some b in m, with the difference split off
    // b. The splitting clause is transcribed even though it always holds here.
    [[nodiscard]] bool card_le(const SetVal& k, const SetVal& m) const {
        check_home(k, "card_le");
        check_home(m, "card_le");
        bool found = false;
        k.bits.for_each_set([&](std::size_t a) {
            if (found) return;
            m.bits.for_each_set([&](std::size_t b) {
                if (found) return;
                if ((a & ~b) != 0) return;                 // a must be a subset of b
                if ((a | (b & ~a)) == b) found = true;     // b = a plus (b minus a)
            });
        });
        return found;
    }

    [[nodiscard]] bool card_lt(const SetVal& k, const SetVal& m) const {
        return card_le(k, m) && k != m;
    }

    // Least triple set with <x,zero,zero> and <zero,x,zero> for x semifinite,
    // closed under <x,y,z> -> <x, y+, z+x>. Triples are kept abstract; the
    // value list grows if a mutated step escapes the semifinite family.
    [[nodiscard]] const MulGraph& mul_graph() const {
        if (graph_) return *graph_;
        MulGraph g;
        g.level = level_;
        auto value_idx = [&](const SetVal& v) {
            for (std::size_t i = 0; i < g.values.size(); ++i)
                if (g.values[i] == v) return i;
            g.values.push_back(v);
            return g.values.size() - 1;
        };
        for (const auto& v : semifinite()) value_idx(v);
        std::size_t iz = value_idx(zero());
        std::set<std::array<std::size_t, 3>> seen;
        std::deque<std::array<std::size_t, 3>> work;
        auto push = [&](std::array<std::size_t, 3> t) {
            if (seen.insert(t).second) work.push_back(t);
        };
        for (std::size_t i = 0; i < semifinite().size(); ++i) {
            push({i, iz, iz});
            push({iz, i, iz});
        }
        while (!work.empty()) {
            auto [x, y, z] = work.front();
            work.pop_front();
            std::size_t y2 = value_idx(succ(g.values[y]));
            std::size_t z2 = value_idx(add(g.values[z], g.values[x]));
            push({x, y2, z2});
        }
        g.triples.assign(seen.begin(), seen.end());
        graph_ = std::move(g);
        return *graph_;
    }

    // x*y = { u : u in z for some z with <x,y,z> in the graph }
    [[nodiscard]] SetVal mul(const SetVal& x, const SetVal& y) const {
        check_home(x, "mul");
        check_home(y, "mul");
        const MulGraph& g = mul_graph();
        SetVal out = lambda();
        for (auto& t : g.triples)
            if (g.values[t[0]] == x && g.values[t[1]] == y)
                out = set_union(out, g.values[t[2]]);
        return out;
    }

    // 2^m = { u : USC(a) in m for some a, u similar to SSC(a) }
    [[nodiscard]] SetVal exp2(const SetVal& m) const {
        check_home(m, "exp2");
        if (level_ < 3)
            throw UniverseError("exp2 needs home level 3 or higher (USC shapes live one level down)");
        SetVal out = lambda();
        std::set<std::size_t> wanted;     // member sizes of the result
        for (auto w : members(m)) {
            SetVal ws = expand(u_, w);    // candidate USC(a)
            SetVal a = empty_set(u_, ws.level - 1);
            bool all_singletons = true;
            for (auto x : members(ws)) {
                SetVal xs = expand(u_, x);
                if (xs.card() != 1) { all_singletons = false; break; }
                a = set_union(a, xs);
            }
            if (!all_singletons || usc(u_, a) != ws) continue;
            wanted.insert(ssc(u_, a).card());     // |SSC(a)| = 2^|a|
        }
        if (!wanted.empty())
            for (std::size_t j = 0; j < u_.size(level_ - 1); ++j)
                if (wanted.count(__builtin_popcountll(j))) out.bits.set(j);
        return out;
    }

    // T(k) = { u : u similar to USC(x) for some x in k }, one level up.
    [[nodiscard]] SetVal t_op(const SetVal& k) const {
        check_home(k, "t_op");
        if (level_ + 1 > u_.max_level + 1)
            throw UniverseError("t_op lands at level " + std::to_string(level_ + 1) +
                                ", not representable here");
        SetVal out = empty_set(u_, level_ + 1);
        std::set<std::size_t> sizes;
        for (auto x : members(k)) sizes.insert(usc(u_, expand(u_, x)).card());
        if (!sizes.empty())
            for (std::size_t j = 0; j < u_.size(level_); ++j)
                if (sizes.count(__builtin_popcountll(j))) out.bits.set(j);
        return out;
    }

    // J(m) = { x finite-cardinal : x < m }, one level up; JBar uses <=.
    [[nodiscard]] SetVal j_set(const SetVal& m) const { return j_like(m, false); }
    [[nodiscard]] SetVal j_bar(const SetVal& m) const { return j_like(m, true); }

    // Nc(x): everything equinumerous with x, one level above x.
    [[nodiscard]] SetVal nc(const SetVal& x) const {
        if (x.level != level_ - 1)
            throw UniverseError("nc argument must live one level below the cardinal home level");
        SetVal out = lambda();
        for (std::size_t j = 0; j < u_.size(level_ - 1); ++j)
            if (static_cast<std::size_t>(__builtin_popcountll(j)) == x.card()) out.bits.set(j);
        return out;
    }

    [[nodiscard]] SymCardinal sym(const SetVal& k) const {
        check_home(k, "sym");
        if (k.empty()) return {level_, true, 0};
        std::optional<std::size_t> size;
        bool uniform = true;
        k.bits.for_each_set([&](std::size_t j) {
            auto c = static_cast<std::size_t>(__builtin_popcountll(j));
            if (!size) size = c;
            else if (*size != c) uniform = false;
        });
        if (!uniform) throw std::invalid_argument("sym: members of a cardinal must share one size");
        return {level_, false, *size};
    }

    // The cardinal whose members have exactly k members; empty once k exceeds
    // what fits.
    [[nodiscard]] SetVal from_size(std::size_t k) const {
        SetVal out = lambda();
        for (std::size_t j = 0; j < u_.size(level_ - 1); ++j)
            if (static_cast<std::size_t>(__builtin_popcountll(j)) == k) out.bits.set(j);
        return out;
    }

    [[nodiscard]] bool is_cardinal(const SetVal& k) const {
        check_home(k, "is_cardinal");
        if (k.empty()) return true;
        try { (void)sym(k); return true; } catch (const std::invalid_argument&) { return false; }
    }

    // --- size oracle: the laws the extensional ops must reproduce ---------

    [[nodiscard]] SymCardinal sym_zero() const { return {level_, false, 0}; }
    [[nodiscard]] SymCardinal sym_overflow() const { return {level_, true, 0}; }

    [[nodiscard]] SymCardinal sym_succ(const SymCardinal& a) const {
        if (a.overflow || a.size + 1 > member_capacity()) return sym_overflow();
        return {level_, false, a.size + 1};
    }
    [[nodiscard]] SymCardinal sym_add(const SymCardinal& a, const SymCardinal& b) const {
        if (a.overflow || b.overflow || a.size + b.size > member_capacity()) return sym_overflow();
        return {level_, false, a.size + b.size};
    }
    [[nodiscard]] SymCardinal sym_mul(const SymCardinal& a, const SymCardinal& b) const {
        // zero annihilates even the overflow value: the recursion graph seeds a
        // <x, zero, zero> row for every semifinite x
        if ((!a.overflow && a.size == 0) || (!b.overflow && b.size == 0)) return sym_zero();
        if (a.overflow || b.overflow || a.size * b.size > member_capacity()) return sym_overflow();
        return {level_, false, a.size * b.size};
    }
    [[nodiscard]] SymCardinal sym_exp2(const SymCardinal& a) const {
        if (level_ < 3) throw UniverseError("sym_exp2 needs home level 3 or higher");
        if (a.overflow || a.size > u_.size(level_ - 3)) return sym_overflow();
        return {level_, false, std::size_t{1} << a.size};
    }
    [[nodiscard]] SymCardinal sym_t(const SymCardinal& a) const {
        return {level_ + 1, a.overflow, a.size};
    }

private:
    void check_home(const SetVal& k, const char* op) const {
        if (k.level != level_)
            throw UniverseError(std::string(op) + ": expected a level-" + std::to_string(level_) +
                                " value, got level " + std::to_string(k.level));
    }

    SetVal j_like(const SetVal& m, bool weak) const {
        check_home(m, "j");
        if (level_ > u_.max_level)
            throw UniverseError("J segment lands at level " + std::to_string(level_ + 1) +
                                ", whose members are not indexable here");
        SetVal out = empty_set(u_, level_ + 1);
        for (const auto& c : fcard()) {
            bool in = weak ? card_le(c, m) : card_lt(c, m);
            if (in) out.bits.set(index_of(u_, c));
        }
        return out;
    }

    const Universe& u_;
    int level_;
    Mutation mutation_;
    mutable std::optional<std::vector<SetVal>> fcard_;
    mutable std::optional<std::vector<SetVal>> semifinite_;
    mutable std::optional<MulGraph> graph_;
};

} // namespace nfkit
