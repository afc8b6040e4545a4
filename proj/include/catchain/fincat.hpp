#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catchain/errors.hpp"

namespace catchain {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct MorphismSpec {
    std::string id;
    std::string src;
    std::string tgt;
};

struct CompositeSpec {
    std::string g;       // applied second
    std::string f;       // applied first
    std::string result;  // g o f
};

// Unvalidated category description, as read from a document or built in code.
struct CategoryData {
    std::vector<std::string> objects;
    std::vector<MorphismSpec> morphisms;
    std::map<std::string, std::string> identities;  // object -> morphism id
    std::vector<CompositeSpec> composites;
};

struct CategoryViolation {
    enum class Kind {
        DuplicateObject,
        DuplicateMorphism,
        UnknownObject,
        UnknownMorphism,
        BadIdentity,        // identity with src/tgt not equal to its object
        MissingIdentity,
        NotComposablePair,  // composite listed for src(g) != tgt(f)
        DuplicateComposite,
        SrcTgtMismatch,     // listed result has wrong endpoints
        MissingComposite,
        UnitLaw,
        Associativity,
    };
    Kind kind;
    std::vector<std::string> subjects;  // ids involved, in role order
    std::string detail;

    std::string message() const {
        switch (kind) {
            case Kind::DuplicateObject: return "duplicate object id '" + subjects[0] + "'";
            case Kind::DuplicateMorphism: return "duplicate morphism id '" + subjects[0] + "'";
            case Kind::UnknownObject: return "unknown object '" + subjects[0] + "' (" + detail + ")";
            case Kind::UnknownMorphism: return "unknown morphism '" + subjects[0] + "' (" + detail + ")";
            case Kind::BadIdentity:
                return "identity of '" + subjects[0] + "' is '" + subjects[1] + "', whose endpoints are not both '" + subjects[0] + "'";
            case Kind::MissingIdentity: return "object '" + subjects[0] + "' has no identity";
            case Kind::NotComposablePair:
                return "composite listed for non-composable pair (" + subjects[0] + ", " + subjects[1] + ")";
            case Kind::DuplicateComposite:
                return "conflicting composites listed for (" + subjects[0] + ", " + subjects[1] + ")";
            case Kind::SrcTgtMismatch:
                return "composite " + subjects[0] + " o " + subjects[1] + " = " + subjects[2] + " has wrong endpoints";
            case Kind::MissingComposite:
                return "missing composite for composable pair (" + subjects[0] + ", " + subjects[1] + ")";
            case Kind::UnitLaw:
                return "unit law violated on the " + detail + " of '" + subjects[0] + "'";
            case Kind::Associativity:
                return "associativity violated on (" + subjects[0] + ", " + subjects[1] + ", " + subjects[2] + ")";
        }
        return "unknown violation";
    }
};

// Raised by validate_* when a check reports violations; carries all of them.
struct ValidationError : std::runtime_error {
    std::vector<std::string> violations;

    explicit ValidationError(std::vector<std::string> msgs)
        : std::runtime_error(join(msgs)), violations(std::move(msgs)) {}

private:
    static std::string join(const std::vector<std::string>& msgs) {
        std::string out = "validation failed (" + std::to_string(msgs.size()) + " violation(s))";
        for (const auto& m : msgs) out += "\n  - " + m;
        return out;
    }
};

class FinCategory;

namespace detail {
inline std::vector<CategoryViolation> check_category_impl(const CategoryData&, FinCategory*);
}

// Finite category with a total composition table, immutable once built.
// Construct through validate_category.
class FinCategory {
public:
    std::size_t object_count() const { return objects_.size(); }
    std::size_t morphism_count() const { return morphism_ids_.size(); }

    const std::string& object_id(std::size_t i) const { return objects_[i]; }
    const std::string& morphism_id(std::size_t m) const { return morphism_ids_[m]; }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<std::string>& morphism_ids() const { return morphism_ids_; }

    std::optional<std::size_t> object_index(const std::string& id) const {
        auto it = object_index_.find(id);
        if (it == object_index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<std::size_t> morphism_index(const std::string& id) const {
        auto it = morphism_index_.find(id);
        if (it == morphism_index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t src(std::size_t m) const { return src_[m]; }
    std::size_t tgt(std::size_t m) const { return tgt_[m]; }
    std::size_t identity(std::size_t obj) const { return identity_[obj]; }
    bool is_identity(std::size_t m) const { return identity_[src_[m]] == m; }

    bool composable(std::size_t g, std::size_t f) const { return src_[g] == tgt_[f]; }
    std::size_t compose(std::size_t g, std::size_t f) const { return table_[g][f]; }

    friend bool operator==(const FinCategory& a, const FinCategory& b) {
        return a.objects_ == b.objects_ && a.morphism_ids_ == b.morphism_ids_ &&
               a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.identity_ == b.identity_ &&
               a.table_ == b.table_;
    }
    friend bool operator!=(const FinCategory& a, const FinCategory& b) { return !(a == b); }

private:
    friend std::vector<CategoryViolation> detail::check_category_impl(const CategoryData&,
                                                                      FinCategory*);

    std::vector<std::string> objects_;
    std::vector<std::string> morphism_ids_;
    std::map<std::string, std::size_t> object_index_;
    std::map<std::string, std::size_t> morphism_index_;
    std::vector<std::size_t> src_, tgt_;
    std::vector<std::size_t> identity_;              // object -> morphism
    std::vector<std::vector<std::size_t>> table_;    // table_[g][f], npos off the composable pairs
};

namespace detail {

// Structural pass first; the law pass runs only when every reference resolves.
// Returns the category through `out` when it is sound.
inline std::vector<CategoryViolation> check_category_impl(const CategoryData& data,
                                                          FinCategory* out) {
    using K = CategoryViolation::Kind;
    std::vector<CategoryViolation> bad;

    FinCategory c;
    for (const auto& o : data.objects) {
        if (c.object_index_.count(o)) {
            bad.push_back({K::DuplicateObject, {o}, {}});
            continue;
        }
        c.object_index_[o] = c.objects_.size();
        c.objects_.push_back(o);
    }
    for (const auto& m : data.morphisms) {
        if (c.morphism_index_.count(m.id)) {
            bad.push_back({K::DuplicateMorphism, {m.id}, {}});
            continue;
        }
        auto s = c.object_index_.find(m.src);
        auto t = c.object_index_.find(m.tgt);
        if (s == c.object_index_.end()) bad.push_back({K::UnknownObject, {m.src}, "src of " + m.id});
        if (t == c.object_index_.end()) bad.push_back({K::UnknownObject, {m.tgt}, "tgt of " + m.id});
        if (s == c.object_index_.end() || t == c.object_index_.end()) continue;
        c.morphism_index_[m.id] = c.morphism_ids_.size();
        c.morphism_ids_.push_back(m.id);
        c.src_.push_back(s->second);
        c.tgt_.push_back(t->second);
    }

    c.identity_.assign(c.objects_.size(), npos);
    for (const auto& [obj, mor] : data.identities) {
        auto oi = c.object_index_.find(obj);
        if (oi == c.object_index_.end()) {
            bad.push_back({K::UnknownObject, {obj}, "identity table"});
            continue;
        }
        auto mi = c.morphism_index_.find(mor);
        if (mi == c.morphism_index_.end()) {
            bad.push_back({K::UnknownMorphism, {mor}, "identity of " + obj});
            continue;
        }
        if (c.src_[mi->second] != oi->second || c.tgt_[mi->second] != oi->second) {
            bad.push_back({K::BadIdentity, {obj, mor}, {}});
            continue;
        }
        c.identity_[oi->second] = mi->second;
    }
    for (std::size_t o = 0; o < c.objects_.size(); ++o)
        if (c.identity_[o] == npos) bad.push_back({K::MissingIdentity, {c.objects_[o]}, {}});

    if (!bad.empty()) return bad;

    const std::size_t n = c.morphism_ids_.size();
    c.table_.assign(n, std::vector<std::size_t>(n, npos));
    for (const auto& entry : data.composites) {
        auto gi = c.morphism_index_.find(entry.g);
        auto fi = c.morphism_index_.find(entry.f);
        auto ri = c.morphism_index_.find(entry.result);
        bool resolved = true;
        if (gi == c.morphism_index_.end()) { bad.push_back({K::UnknownMorphism, {entry.g}, "compose table"}); resolved = false; }
        if (fi == c.morphism_index_.end()) { bad.push_back({K::UnknownMorphism, {entry.f}, "compose table"}); resolved = false; }
        if (ri == c.morphism_index_.end()) { bad.push_back({K::UnknownMorphism, {entry.result}, "compose table"}); resolved = false; }
        if (!resolved) continue;
        const std::size_t g = gi->second, f = fi->second, r = ri->second;
        if (!c.composable(g, f)) {
            bad.push_back({K::NotComposablePair, {entry.g, entry.f}, {}});
            continue;
        }
        if (c.table_[g][f] != npos && c.table_[g][f] != r) {
            bad.push_back({K::DuplicateComposite, {entry.g, entry.f}, {}});
            continue;
        }
        c.table_[g][f] = r;
    }
    if (!bad.empty()) return bad;

    // Composites with an identity may be omitted; the unit laws force them.
    for (std::size_t m = 0; m < n; ++m) {
        const std::size_t id_src = c.identity_[c.src_[m]];
        const std::size_t id_tgt = c.identity_[c.tgt_[m]];
        if (c.table_[m][id_src] == npos) c.table_[m][id_src] = m;
        if (c.table_[id_tgt][m] == npos) c.table_[id_tgt][m] = m;
    }

    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t f = 0; f < n; ++f) {
            if (!c.composable(g, f)) continue;
            const std::size_t r = c.table_[g][f];
            if (r == npos) {
                bad.push_back({K::MissingComposite, {c.morphism_ids_[g], c.morphism_ids_[f]}, {}});
                continue;
            }
            if (c.src_[r] != c.src_[f] || c.tgt_[r] != c.tgt_[g])
                bad.push_back({K::SrcTgtMismatch,
                               {c.morphism_ids_[g], c.morphism_ids_[f], c.morphism_ids_[r]}, {}});
        }

    for (std::size_t m = 0; m < n; ++m) {
        const std::size_t right = c.table_[m][c.identity_[c.src_[m]]];
        const std::size_t left = c.table_[c.identity_[c.tgt_[m]]][m];
        if (right != npos && right != m)
            bad.push_back({K::UnitLaw, {c.morphism_ids_[m]}, "right"});
        if (left != npos && left != m)
            bad.push_back({K::UnitLaw, {c.morphism_ids_[m]}, "left"});
    }

    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t g = 0; g < n; ++g) {
            if (!c.composable(h, g)) continue;
            for (std::size_t f = 0; f < n; ++f) {
                if (!c.composable(g, f)) continue;
                const std::size_t gf = c.table_[g][f];
                const std::size_t hg = c.table_[h][g];
                if (gf == npos || hg == npos) continue;  // already reported
                const std::size_t a = c.table_[h][gf];
                const std::size_t b = c.table_[hg][f];
                if (a == npos || b == npos) continue;
                if (a != b)
                    bad.push_back({K::Associativity,
                                   {c.morphism_ids_[h], c.morphism_ids_[g], c.morphism_ids_[f]}, {}});
            }
        }

    if (bad.empty() && out != nullptr) *out = std::move(c);
    return bad;
}

}  // namespace detail

// Reports every violated axiom instance; empty result means the data is a category.
inline std::vector<CategoryViolation> check_category(const CategoryData& data) {
    return detail::check_category_impl(data, nullptr);
}

inline FinCategory validate_category(const CategoryData& data) {
    FinCategory c;
    auto bad = detail::check_category_impl(data, &c);
    if (!bad.empty()) {
        std::vector<std::string> msgs;
        msgs.reserve(bad.size());
        for (const auto& v : bad) msgs.push_back(v.message());
        throw ValidationError(std::move(msgs));
    }
    return c;
}

struct FunctorData {
    std::map<std::string, std::string> obj_map;
    std::map<std::string, std::string> mor_map;
};

struct FunctorViolation {
    enum class Kind {
        MissingObjectImage,
        MissingMorphismImage,
        UnknownObject,
        UnknownMorphism,
        SrcPreservation,
        TgtPreservation,
        IdentityPreservation,
        CompositePreservation,
    };
    Kind kind;
    std::vector<std::string> subjects;

    std::string message() const {
        switch (kind) {
            case Kind::MissingObjectImage: return "object '" + subjects[0] + "' has no image";
            case Kind::MissingMorphismImage: return "morphism '" + subjects[0] + "' has no image";
            case Kind::UnknownObject: return "unknown object '" + subjects[0] + "' in functor data";
            case Kind::UnknownMorphism: return "unknown morphism '" + subjects[0] + "' in functor data";
            case Kind::SrcPreservation: return "source not preserved on '" + subjects[0] + "'";
            case Kind::TgtPreservation: return "target not preserved on '" + subjects[0] + "'";
            case Kind::IdentityPreservation: return "identity of '" + subjects[0] + "' not sent to an identity";
            case Kind::CompositePreservation:
                return "composite not preserved on (" + subjects[0] + ", " + subjects[1] + ")";
        }
        return "unknown violation";
    }
};

class Functor {
public:
    Functor() = default;
    Functor(FinCategory source, FinCategory target, std::vector<std::size_t> obj_map,
            std::vector<std::size_t> mor_map)
        : source_(std::move(source)), target_(std::move(target)),
          obj_map_(std::move(obj_map)), mor_map_(std::move(mor_map)) {}

    const FinCategory& source() const { return source_; }
    const FinCategory& target() const { return target_; }
    std::size_t obj_image(std::size_t o) const { return obj_map_[o]; }
    std::size_t mor_image(std::size_t m) const { return mor_map_[m]; }

    friend bool operator==(const Functor& a, const Functor& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ &&
               a.obj_map_ == b.obj_map_ && a.mor_map_ == b.mor_map_;
    }
    friend bool operator!=(const Functor& a, const Functor& b) { return !(a == b); }

private:
    FinCategory source_, target_;
    std::vector<std::size_t> obj_map_, mor_map_;
};

inline std::vector<FunctorViolation> check_functor(const FinCategory& source,
                                                   const FinCategory& target,
                                                   const FunctorData& data) {
    using K = FunctorViolation::Kind;
    std::vector<FunctorViolation> bad;

    std::vector<std::size_t> omap(source.object_count(), npos);
    std::vector<std::size_t> mmap(source.morphism_count(), npos);
    for (const auto& [x, fx] : data.obj_map) {
        auto xi = source.object_index(x);
        auto yi = target.object_index(fx);
        if (!xi) { bad.push_back({K::UnknownObject, {x}}); continue; }
        if (!yi) { bad.push_back({K::UnknownObject, {fx}}); continue; }
        omap[*xi] = *yi;
    }
    for (const auto& [m, fm] : data.mor_map) {
        auto mi = source.morphism_index(m);
        auto ni = target.morphism_index(fm);
        if (!mi) { bad.push_back({K::UnknownMorphism, {m}}); continue; }
        if (!ni) { bad.push_back({K::UnknownMorphism, {fm}}); continue; }
        mmap[*mi] = *ni;
    }
    for (std::size_t o = 0; o < source.object_count(); ++o)
        if (omap[o] == npos) bad.push_back({K::MissingObjectImage, {source.object_id(o)}});
    for (std::size_t m = 0; m < source.morphism_count(); ++m)
        if (mmap[m] == npos) bad.push_back({K::MissingMorphismImage, {source.morphism_id(m)}});
    if (!bad.empty()) return bad;

    for (std::size_t m = 0; m < source.morphism_count(); ++m) {
        if (target.src(mmap[m]) != omap[source.src(m)])
            bad.push_back({K::SrcPreservation, {source.morphism_id(m)}});
        if (target.tgt(mmap[m]) != omap[source.tgt(m)])
            bad.push_back({K::TgtPreservation, {source.morphism_id(m)}});
    }
    for (std::size_t o = 0; o < source.object_count(); ++o)
        if (mmap[source.identity(o)] != target.identity(omap[o]))
            bad.push_back({K::IdentityPreservation, {source.object_id(o)}});
    for (std::size_t g = 0; g < source.morphism_count(); ++g)
        for (std::size_t f = 0; f < source.morphism_count(); ++f) {
            if (!source.composable(g, f)) continue;
            if (target.src(mmap[g]) != target.tgt(mmap[f])) continue;  // reported above
            if (mmap[source.compose(g, f)] != target.compose(mmap[g], mmap[f]))
                bad.push_back({K::CompositePreservation, {source.morphism_id(g), source.morphism_id(f)}});
        }
    return bad;
}

inline Functor validate_functor(const FinCategory& source, const FinCategory& target,
                                const FunctorData& data) {
    auto bad = check_functor(source, target, data);
    if (!bad.empty()) {
        std::vector<std::string> msgs;
        msgs.reserve(bad.size());
        for (const auto& v : bad) msgs.push_back(v.message());
        throw ValidationError(std::move(msgs));
    }
    std::vector<std::size_t> omap(source.object_count());
    std::vector<std::size_t> mmap(source.morphism_count());
    for (const auto& [x, fx] : data.obj_map) omap[*source.object_index(x)] = *target.object_index(fx);
    for (const auto& [m, fm] : data.mor_map) mmap[*source.morphism_index(m)] = *target.morphism_index(fm);
    return Functor(source, target, std::move(omap), std::move(mmap));
}

inline Functor identity_functor(const FinCategory& c) {
    std::vector<std::size_t> omap(c.object_count());
    std::vector<std::size_t> mmap(c.morphism_count());
    for (std::size_t o = 0; o < omap.size(); ++o) omap[o] = o;
    for (std::size_t m = 0; m < mmap.size(); ++m) mmap[m] = m;
    return Functor(c, c, std::move(omap), std::move(mmap));
}

inline Functor compose_functors(const Functor& g, const Functor& f) {
    if (f.target() != g.source())
        throw DimensionError("compose_functors: middle categories differ");
    std::vector<std::size_t> omap(f.source().object_count());
    std::vector<std::size_t> mmap(f.source().morphism_count());
    for (std::size_t o = 0; o < omap.size(); ++o) omap[o] = g.obj_image(f.obj_image(o));
    for (std::size_t m = 0; m < mmap.size(); ++m) mmap[m] = g.mor_image(f.mor_image(m));
    return Functor(f.source(), g.target(), std::move(omap), std::move(mmap));
}

struct NatTransfData {
    std::map<std::string, std::string> components;  // source object -> target morphism
};

struct NatViolation {
    enum class Kind {
        MissingComponent,
        UnknownObject,
        UnknownMorphism,
        SourceEndpoint,  // s(alpha_x) != F(x)
        TargetEndpoint,  // t(alpha_x) != G(x)
        Naturality,
    };
    Kind kind;
    std::vector<std::string> subjects;  // Naturality: {f, G(f) o alpha_x, alpha_y o F(f)}

    std::string message() const {
        switch (kind) {
            case Kind::MissingComponent: return "no component at object '" + subjects[0] + "'";
            case Kind::UnknownObject: return "unknown object '" + subjects[0] + "' in components";
            case Kind::UnknownMorphism: return "unknown morphism '" + subjects[0] + "' in components";
            case Kind::SourceEndpoint: return "component at '" + subjects[0] + "' does not start at F(" + subjects[0] + ")";
            case Kind::TargetEndpoint: return "component at '" + subjects[0] + "' does not end at G(" + subjects[0] + ")";
            case Kind::Naturality:
                return "naturality fails on '" + subjects[0] + "': " + subjects[1] + " != " + subjects[2];
        }
        return "unknown violation";
    }
};

class NatTransf {
public:
    NatTransf() = default;
    NatTransf(Functor from, Functor to, std::vector<std::size_t> components)
        : from_(std::move(from)), to_(std::move(to)), components_(std::move(components)) {}

    const Functor& from() const { return from_; }
    const Functor& to() const { return to_; }
    std::size_t component(std::size_t obj) const { return components_[obj]; }

private:
    Functor from_, to_;
    std::vector<std::size_t> components_;  // source object -> target morphism
};

inline std::vector<NatViolation> check_nat_transf(const Functor& from, const Functor& to,
                                                  const NatTransfData& data) {
    if (from.source() != to.source() || from.target() != to.target())
        throw DimensionError("check_nat_transf: functors are not parallel");
    using K = NatViolation::Kind;
    const FinCategory& c = from.source();
    const FinCategory& d = from.target();
    std::vector<NatViolation> bad;

    std::vector<std::size_t> comp(c.object_count(), npos);
    for (const auto& [x, ax] : data.components) {
        auto xi = c.object_index(x);
        auto mi = d.morphism_index(ax);
        if (!xi) { bad.push_back({K::UnknownObject, {x}}); continue; }
        if (!mi) { bad.push_back({K::UnknownMorphism, {ax}}); continue; }
        comp[*xi] = *mi;
    }
    for (std::size_t o = 0; o < c.object_count(); ++o)
        if (comp[o] == npos) bad.push_back({K::MissingComponent, {c.object_id(o)}});
    if (!bad.empty()) return bad;

    for (std::size_t o = 0; o < c.object_count(); ++o) {
        if (d.src(comp[o]) != from.obj_image(o)) bad.push_back({K::SourceEndpoint, {c.object_id(o)}});
        if (d.tgt(comp[o]) != to.obj_image(o)) bad.push_back({K::TargetEndpoint, {c.object_id(o)}});
    }
    if (!bad.empty()) return bad;

    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
        const std::size_t x = c.src(f), y = c.tgt(f);
        const std::size_t lhs = d.compose(to.mor_image(f), comp[x]);   // G(f) o alpha_x
        const std::size_t rhs = d.compose(comp[y], from.mor_image(f)); // alpha_y o F(f)
        if (lhs != rhs)
            bad.push_back({K::Naturality,
                           {c.morphism_id(f), d.morphism_id(lhs), d.morphism_id(rhs)}});
    }
    return bad;
}

inline NatTransf validate_nat_transf(const Functor& from, const Functor& to,
                                     const NatTransfData& data) {
    auto bad = check_nat_transf(from, to, data);
    if (!bad.empty()) {
        std::vector<std::string> msgs;
        msgs.reserve(bad.size());
        for (const auto& v : bad) msgs.push_back(v.message());
        throw ValidationError(std::move(msgs));
    }
    std::vector<std::size_t> comp(from.source().object_count());
    for (const auto& [x, ax] : data.components)
        comp[*from.source().object_index(x)] = *from.target().morphism_index(ax);
    return NatTransf(from, to, std::move(comp));
}

inline NatTransf identity_nat_transf(const Functor& f) {
    std::vector<std::size_t> comp(f.source().object_count());
    for (std::size_t o = 0; o < comp.size(); ++o)
        comp[o] = f.target().identity(f.obj_image(o));
    return NatTransf(f, f, std::move(comp));
}

// (beta . alpha)_x = beta_x o alpha_x
inline NatTransf vertical_compose(const NatTransf& beta, const NatTransf& alpha) {
    if (alpha.to() != beta.from())
        throw DimensionError("vertical_compose: middle functors differ");
    const FinCategory& d = alpha.from().target();
    std::vector<std::size_t> comp(alpha.from().source().object_count());
    for (std::size_t o = 0; o < comp.size(); ++o)
        comp[o] = d.compose(beta.component(o), alpha.component(o));
    return NatTransf(alpha.from(), beta.to(), std::move(comp));
}

}  // namespace catchain
