#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catchain/fincat.hpp"

namespace catchain {

// Simplex descriptor. For nerves: dimension 0 holds one object id, dimension
// n holds the n morphism ids of a composable chain, first morphism first.
using Simplex = std::vector<std::string>;

inline std::string simplex_label(const Simplex& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += ',';
        out += s[i];
    }
    return out;
}

// Dimension-truncated simplicial set with explicit face/degeneracy tables.
//
// faces[n][i][k] is the index of d_i of the k-th n-simplex, for 1 <= n <=
// max_dim and 0 <= i <= n. degeneracies[n][i][k] is s_i of the k-th
// n-simplex, for 0 <= n < max_dim and 0 <= i <= n.
struct SimplicialSetTrunc {
    std::size_t max_dim = 0;
    std::vector<std::vector<Simplex>> simplices;
    std::vector<std::vector<std::vector<std::size_t>>> faces;
    std::vector<std::vector<std::vector<std::size_t>>> degeneracies;

    std::size_t count(std::size_t dim) const { return simplices[dim].size(); }
    std::size_t face(std::size_t dim, std::size_t i, std::size_t k) const {
        return faces[dim][i][k];
    }
    std::size_t degeneracy(std::size_t dim, std::size_t i, std::size_t k) const {
        return degeneracies[dim][i][k];
    }
};

inline std::vector<std::map<Simplex, std::size_t>> simplex_index(const SimplicialSetTrunc& s) {
    std::vector<std::map<Simplex, std::size_t>> idx(s.max_dim + 1);
    for (std::size_t n = 0; n <= s.max_dim; ++n)
        for (std::size_t k = 0; k < s.simplices[n].size(); ++k) idx[n][s.simplices[n][k]] = k;
    return idx;
}

// Checks every simplicial identity whose two sides are defined within the
// truncation. Returns a description of each failure.
inline std::vector<std::string> check_simplicial_identities(const SimplicialSetTrunc& s) {
    std::vector<std::string> bad;
    auto note = [&](std::size_t dim, std::size_t k, const std::string& what) {
        bad.push_back(what + " fails at dimension " + std::to_string(dim) + ", simplex " +
                      std::to_string(k));
    };

    // d_i d_j = d_{j-1} d_i, i < j
    for (std::size_t n = 2; n <= s.max_dim; ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 0; i < j; ++i)
                for (std::size_t k = 0; k < s.count(n); ++k)
                    if (s.face(n - 1, i, s.face(n, j, k)) != s.face(n - 1, j - 1, s.face(n, i, k)))
                        note(n, k, "d" + std::to_string(i) + " d" + std::to_string(j));

    // s_i s_j = s_{j+1} s_i, i <= j
    for (std::size_t n = 0; n + 2 <= s.max_dim; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= j; ++i)
                for (std::size_t k = 0; k < s.count(n); ++k)
                    if (s.degeneracy(n + 1, i, s.degeneracy(n, j, k)) !=
                        s.degeneracy(n + 1, j + 1, s.degeneracy(n, i, k)))
                        note(n, k, "s" + std::to_string(i) + " s" + std::to_string(j));

    // mixed identities on d_i s_j with s_j : n -> n+1
    for (std::size_t n = 0; n + 1 <= s.max_dim; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= n + 1; ++i)
                for (std::size_t k = 0; k < s.count(n); ++k) {
                    const std::size_t lhs = s.face(n + 1, i, s.degeneracy(n, j, k));
                    if (i == j || i == j + 1) {
                        if (lhs != k) note(n, k, "d" + std::to_string(i) + " s" + std::to_string(j) + " = id");
                    } else if (i < j) {
                        if (n == 0) continue;  // cannot occur: i < j <= n needs n >= 1
                        if (lhs != s.degeneracy(n - 1, j - 1, s.face(n, i, k)))
                            note(n, k, "d" + std::to_string(i) + " s" + std::to_string(j));
                    } else {  // i > j + 1
                        if (lhs != s.degeneracy(n - 1, j, s.face(n, i - 1, k)))
                            note(n, k, "d" + std::to_string(i) + " s" + std::to_string(j));
                    }
                }

    return bad;
}

// degenerate[n][k] is true iff the k-th n-simplex is in the image of some s_i.
inline std::vector<std::vector<bool>> degenerate_flags(const SimplicialSetTrunc& s) {
    std::vector<std::vector<bool>> flags(s.max_dim + 1);
    for (std::size_t n = 0; n <= s.max_dim; ++n) flags[n].assign(s.count(n), false);
    for (std::size_t n = 0; n + 1 <= s.max_dim; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t k = 0; k < s.count(n); ++k) flags[n + 1][s.degeneracy(n, i, k)] = true;
    return flags;
}

namespace detail {

// Vertex objects x_0 .. x_n of a chain, as category object indices.
inline std::vector<std::size_t> chain_vertices(const FinCategory& c,
                                               const std::vector<std::size_t>& chain) {
    std::vector<std::size_t> v;
    v.reserve(chain.size() + 1);
    if (chain.empty()) return v;
    v.push_back(c.src(chain[0]));
    for (std::size_t m : chain) v.push_back(c.tgt(m));
    return v;
}

}  // namespace detail

// Nerve of a finite category, truncated at max_dim. The n-simplices are the
// composable n-chains, ordered lexicographically by morphism id (0-simplices
// are objects ordered by id). Orientation: d_0 drops the first morphism of a
// chain, d_n the last, so d_0 of a 1-simplex is its target and d_1 its
// source; inner d_i composes the i-th morphism with the (i+1)-th.
inline SimplicialSetTrunc nerve(const FinCategory& c, std::size_t max_dim) {
    SimplicialSetTrunc out;
    out.max_dim = max_dim;
    out.simplices.resize(max_dim + 1);
    out.faces.resize(max_dim + 1);
    out.degeneracies.resize(max_dim + 1);

    std::vector<std::size_t> sorted_objects(c.object_count());
    for (std::size_t i = 0; i < sorted_objects.size(); ++i) sorted_objects[i] = i;
    std::sort(sorted_objects.begin(), sorted_objects.end(),
              [&](std::size_t a, std::size_t b) { return c.object_id(a) < c.object_id(b); });
    std::vector<std::size_t> sorted_morphisms(c.morphism_count());
    for (std::size_t i = 0; i < sorted_morphisms.size(); ++i) sorted_morphisms[i] = i;
    std::sort(sorted_morphisms.begin(), sorted_morphisms.end(),
              [&](std::size_t a, std::size_t b) { return c.morphism_id(a) < c.morphism_id(b); });

    // chains[n][k]: morphism indices of the k-th n-simplex (empty at n = 0)
    std::vector<std::vector<std::vector<std::size_t>>> chains(max_dim + 1);
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> chain_index(max_dim + 1);
    // object index of each 0-simplex
    std::vector<std::size_t> vertex_object;

    for (std::size_t o : sorted_objects) {
        chain_index[0][{o}] = out.simplices[0].size();  // keyed by {object}
        out.simplices[0].push_back({c.object_id(o)});
        vertex_object.push_back(o);
        chains[0].push_back({});
    }
    std::vector<std::size_t> vertex_position(c.object_count());
    for (std::size_t k = 0; k < vertex_object.size(); ++k) vertex_position[vertex_object[k]] = k;

    for (std::size_t n = 1; n <= max_dim; ++n) {
        if (n == 1) {
            for (std::size_t m : sorted_morphisms) chains[1].push_back({m});
        } else {
            for (const auto& stem : chains[n - 1])
                for (std::size_t m : sorted_morphisms) {
                    if (c.src(m) != c.tgt(stem.back())) continue;
                    auto chain = stem;
                    chain.push_back(m);
                    chains[n].push_back(std::move(chain));
                }
        }
        for (std::size_t k = 0; k < chains[n].size(); ++k) {
            chain_index[n][chains[n][k]] = k;
            Simplex desc;
            for (std::size_t m : chains[n][k]) desc.push_back(c.morphism_id(m));
            out.simplices[n].push_back(std::move(desc));
        }
    }

    const auto index_of = [&](std::size_t dim, const std::vector<std::size_t>& chain,
                              std::size_t vertex) -> std::size_t {
        if (dim == 0) return vertex_position[vertex];
        return chain_index[dim].at(chain);
    };

    for (std::size_t n = 1; n <= max_dim; ++n) {
        out.faces[n].assign(n + 1, std::vector<std::size_t>(chains[n].size()));
        for (std::size_t k = 0; k < chains[n].size(); ++k) {
            const auto& chain = chains[n][k];
            for (std::size_t i = 0; i <= n; ++i) {
                std::vector<std::size_t> result;
                std::size_t vertex = 0;
                if (i == 0) {
                    result.assign(chain.begin() + 1, chain.end());
                    vertex = c.tgt(chain[0]);
                } else if (i == n) {
                    result.assign(chain.begin(), chain.end() - 1);
                    vertex = c.src(chain[0]);
                } else {
                    result = chain;
                    result[i - 1] = c.compose(chain[i], chain[i - 1]);
                    result.erase(result.begin() + static_cast<std::ptrdiff_t>(i));
                }
                out.faces[n][i][k] = index_of(n - 1, result, vertex);
            }
        }
    }

    for (std::size_t n = 0; n + 1 <= max_dim; ++n) {
        out.degeneracies[n].assign(n + 1, std::vector<std::size_t>(chains[n].size()));
        for (std::size_t k = 0; k < chains[n].size(); ++k) {
            const auto& chain = chains[n][k];
            const std::size_t x0 = n == 0 ? vertex_object[k] : c.src(chain[0]);
            for (std::size_t i = 0; i <= n; ++i) {
                const std::size_t vertex_i = i == 0 ? x0 : c.tgt(chain[i - 1]);
                auto result = chain;
                result.insert(result.begin() + static_cast<std::ptrdiff_t>(i),
                              c.identity(vertex_i));
                out.degeneracies[n][i][k] = chain_index[n + 1].at(result);
            }
        }
    }

    auto bad = check_simplicial_identities(out);
    if (!bad.empty()) throw std::logic_error("nerve: simplicial identities broken: " + bad.front());
    return out;
}

// Map of truncated simplicial sets, one index map per dimension.
struct SimplicialMap {
    std::vector<std::vector<std::size_t>> components;

    friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
        return a.components == b.components;
    }
    friend bool operator!=(const SimplicialMap& a, const SimplicialMap& b) { return !(a == b); }
};

inline SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (g.components.size() != f.components.size())
        throw DimensionError("compose(SimplicialMap): truncations differ");
    SimplicialMap out;
    out.components.resize(f.components.size());
    for (std::size_t n = 0; n < f.components.size(); ++n) {
        out.components[n].resize(f.components[n].size());
        for (std::size_t k = 0; k < f.components[n].size(); ++k)
            out.components[n][k] = g.components[n][f.components[n][k]];
    }
    return out;
}

// N(F): sends a chain to its image chain. Commutation with every face and
// degeneracy map is checked after construction.
inline SimplicialMap nerve_of_functor(const Functor& f, const SimplicialSetTrunc& src,
                                      const SimplicialSetTrunc& tgt) {
    if (src.max_dim != tgt.max_dim)
        throw DimensionError("nerve_of_functor: truncations differ");
    const auto tgt_index = simplex_index(tgt);
    const FinCategory& c = f.source();
    const FinCategory& d = f.target();

    SimplicialMap out;
    out.components.resize(src.max_dim + 1);
    for (std::size_t n = 0; n <= src.max_dim; ++n) {
        out.components[n].resize(src.count(n));
        for (std::size_t k = 0; k < src.count(n); ++k) {
            const Simplex& desc = src.simplices[n][k];
            Simplex image;
            image.reserve(desc.size());
            if (n == 0) {
                image.push_back(d.object_id(f.obj_image(*c.object_index(desc[0]))));
            } else {
                for (const auto& id : desc)
                    image.push_back(d.morphism_id(f.mor_image(*c.morphism_index(id))));
            }
            out.components[n][k] = tgt_index[n].at(image);
        }
    }

    for (std::size_t n = 1; n <= src.max_dim; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t k = 0; k < src.count(n); ++k)
                if (tgt.face(n, i, out.components[n][k]) != out.components[n - 1][src.face(n, i, k)])
                    throw std::logic_error("nerve_of_functor: face map does not commute");
    for (std::size_t n = 0; n + 1 <= src.max_dim; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t k = 0; k < src.count(n); ++k)
                if (tgt.degeneracy(n, i, out.components[n][k]) !=
                    out.components[n + 1][src.degeneracy(n, i, k)])
                    throw std::logic_error("nerve_of_functor: degeneracy map does not commute");
    return out;
}

inline SimplicialMap nerve_of_functor(const Functor& f, std::size_t max_dim) {
    const auto src = nerve(f.source(), max_dim);
    const auto tgt = nerve(f.target(), max_dim);
    return nerve_of_functor(f, src, tgt);
}

struct CoskeletalFinding {
    enum class Kind { Ok, MissingFiller, NonUniqueFiller };
    Kind kind = Kind::Ok;
    std::size_t dimension = 0;           // dimension of the absent/duplicated filler
    std::vector<std::size_t> boundary;   // indices of the (dimension-1)-simplices

    bool ok() const { return kind == Kind::Ok; }
};

namespace detail {

// Checks unique fillers at `dim`: every compatible boundary -- a (dim+1)-tuple
// (t_0..t_dim) of (dim-1)-simplices with d_i(t_j) = d_{j-1}(t_i) for i < j --
// must bound exactly one dim-simplex.
inline std::optional<CoskeletalFinding> check_fillers_at(const SimplicialSetTrunc& s,
                                                         std::size_t dim) {
    const std::size_t b = dim - 1;  // dimension of boundary cells
    const std::size_t nb = s.count(b);

    // candidates for position j, keyed by their first j faces
    std::vector<std::map<std::vector<std::size_t>, std::vector<std::size_t>>> by_prefix(dim + 1);
    for (std::size_t j = 1; j <= dim; ++j)
        for (std::size_t t = 0; t < nb; ++t) {
            std::vector<std::size_t> key(j);
            for (std::size_t i = 0; i < j; ++i) key[i] = s.face(b, i, t);
            by_prefix[j][key].push_back(t);
        }

    std::map<std::vector<std::size_t>, std::size_t> filler_count;
    for (std::size_t T = 0; T < s.count(dim); ++T) {
        std::vector<std::size_t> key(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i) key[i] = s.face(dim, i, T);
        ++filler_count[key];
    }

    std::vector<std::size_t> tuple(dim + 1);
    std::optional<CoskeletalFinding> finding;

    // depth-first over positions; position j is fully determined face-wise
    auto extend = [&](auto&& self, std::size_t j) -> bool {  // returns false to stop
        if (j == dim + 1) {
            const auto it = filler_count.find(tuple);
            const std::size_t n_fillers = it == filler_count.end() ? 0 : it->second;
            if (n_fillers == 1) return true;
            finding = CoskeletalFinding{n_fillers == 0 ? CoskeletalFinding::Kind::MissingFiller
                                                       : CoskeletalFinding::Kind::NonUniqueFiller,
                                        dim, tuple};
            return false;
        }
        if (j == 0) {
            for (std::size_t t = 0; t < nb; ++t) {
                tuple[0] = t;
                if (!self(self, 1)) return false;
            }
            return true;
        }
        std::vector<std::size_t> key(j);
        for (std::size_t i = 0; i < j; ++i) key[i] = s.face(b, j - 1, tuple[i]);
        const auto it = by_prefix[j].find(key);
        if (it == by_prefix[j].end()) return true;
        for (std::size_t t : it->second) {
            tuple[j] = t;
            if (!self(self, j + 1)) return false;
        }
        return true;
    };
    extend(extend, 0);
    return finding;
}

}  // namespace detail

// Unique-filler verification at dimension 3, and at dimension 4 when asked
// (boundary tuples grow quickly with the simplex counts).
inline CoskeletalFinding check_two_coskeletal(const SimplicialSetTrunc& s,
                                              bool include_dim4 = false) {
    if (s.max_dim < 3)
        throw DimensionError("check_two_coskeletal: need truncation >= 3");
    if (include_dim4 && s.max_dim < 4)
        throw DimensionError("check_two_coskeletal: dimension-4 check needs truncation >= 4");
    if (auto f = detail::check_fillers_at(s, 3)) return *f;
    if (include_dim4)
        if (auto f = detail::check_fillers_at(s, 4)) return *f;
    return CoskeletalFinding{};
}

}  // namespace catchain
