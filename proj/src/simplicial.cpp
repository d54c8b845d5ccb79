#include "kozmo/simplicial.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "bareiss_rank.hpp"
#include "kozmo/errors.hpp"

namespace kozmo {

namespace {

void require_materializable(std::size_t n) {
    if (n > kMaxComplexVertices) {
        throw ScaleError("simplicial complexes are limited to " + std::to_string(kMaxComplexVertices) +
                         " vertices");
    }
}

bool face_order(VarSet a, VarSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// Enumerates every subset of mask (including the empty set and mask itself).
template <typename Fn>
void for_each_subset(std::uint64_t mask, Fn&& fn) {
    std::uint64_t sub = mask;
    while (true) {
        fn(VarSet(sub));
        if (sub == 0) break;
        sub = (sub - 1) & mask;
    }
}

}  // namespace

// --- SimplicialComplex ----------------------------------------------------

SimplicialComplex SimplicialComplex::void_complex(std::size_t n) {
    require_materializable(n);
    SimplicialComplex c;
    c.n_ = n;
    return c;
}

SimplicialComplex SimplicialComplex::irrelevant(std::size_t n) {
    require_materializable(n);
    SimplicialComplex c;
    c.n_ = n;
    c.faces_.push_back(VarSet{});
    return c;
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t n, std::vector<VarSet> faces) {
    require_materializable(n);
    const auto all = VarSet::full(n);
    std::sort(faces.begin(), faces.end(), face_order);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::unordered_set<std::uint64_t> present;
    for (auto f : faces) {
        if (!f.is_subset_of(all)) throw InvalidInputError("face uses a vertex outside the vertex set");
        present.insert(f.bits());
    }
    for (auto f : faces) {
        for (auto v : f.indices()) {
            if (!present.contains(f.without(v).bits())) {
                throw InvalidInputError("face list is not closed under taking subsets");
            }
        }
    }
    SimplicialComplex c;
    c.n_ = n;
    c.faces_ = std::move(faces);
    return c;
}

bool SimplicialComplex::contains(VarSet face) const {
    return std::binary_search(faces_.begin(), faces_.end(), face, face_order);
}

int SimplicialComplex::dimension() const noexcept {
    if (faces_.empty()) return -2;
    return static_cast<int>(faces_.back().size()) - 1;
}

std::vector<VarSet> SimplicialComplex::facets() const {
    std::unordered_set<std::uint64_t> present;
    for (auto f : faces_) present.insert(f.bits());
    std::vector<VarSet> out;
    for (auto f : faces_) {
        bool maximal = true;
        for (std::size_t v = 0; v < n_ && maximal; ++v) {
            if (!f.contains(v) && present.contains(f.with(v).bits())) maximal = false;
        }
        if (maximal) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex SimplicialComplex::induced(VarSet vertices) const {
    SimplicialComplex c;
    c.n_ = n_;
    for (auto f : faces_) {
        if (f.is_subset_of(vertices)) c.faces_.push_back(f);
    }
    return c;
}

// --- homology -------------------------------------------------------------

std::size_t HomologyProfile::reduced(int k) const noexcept {
    const auto idx = k + 1;
    if (idx < 0 || static_cast<std::size_t>(idx) >= dims.size()) return 0;
    return dims[static_cast<std::size_t>(idx)];
}

bool HomologyProfile::is_acyclic() const noexcept {
    return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

HomologyProfile reduced_homology(const SimplicialComplex& complex) {
    const auto n = complex.vertex_count();
    HomologyProfile profile;
    profile.dims.assign(n + 1, 0);
    if (complex.is_void()) return profile;

    // by_size[s] lists the faces with s vertices (dimension s - 1).
    std::vector<std::vector<VarSet>> by_size(n + 1);
    for (auto f : complex.faces()) by_size[f.size()].push_back(f);

    // ranks[s] = rank of the boundary map from faces of size s to faces of size s - 1.
    std::vector<std::size_t> ranks(n + 2, 0);
    for (std::size_t s = 1; s <= n; ++s) {
        const auto& cols = by_size[s];
        const auto& rows = by_size[s - 1];
        if (cols.empty() || rows.empty()) continue;
        std::unordered_map<std::uint64_t, std::size_t> row_index;
        for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r].bits(), r);
        detail::IntMatrix m(rows.size(), std::vector<detail::BigInt>(cols.size(), 0));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            int sign = 1;
            for (auto v : cols[c].indices()) {
                m[row_index.at(cols[c].without(v).bits())][c] = sign;
                sign = -sign;
            }
        }
        ranks[s] = detail::bareiss_rank(std::move(m));
    }
    for (std::size_t s = 0; s <= n; ++s) {
        profile.dims[s] = by_size[s].size() - ranks[s] - ranks[s + 1];
    }
    return profile;
}

// --- Koszul complexes -----------------------------------------------------

SimplicialComplex upper_complex(const MonomialIdeal& ideal, const Multidegree& mu) {
    const auto n = ideal.ring_dimension();
    require_same_dimension(n, mu.size(), "upper_complex");
    require_materializable(n);
    std::vector<VarSet> faces;
    for_each_subset(support_of(mu).bits(), [&](VarSet tau) {
        Multidegree shifted = mu;
        for (auto i : tau.indices()) --shifted[i];
        if (contains(ideal, shifted)) faces.push_back(tau);
    });
    return SimplicialComplex::from_faces(n, std::move(faces));
}

SimplicialComplex lower_complex(const MonomialIdeal& ideal, const Multidegree& mu) {
    const auto n = ideal.ring_dimension();
    require_same_dimension(n, mu.size(), "lower_complex");
    require_materializable(n);
    const auto low = lowered(mu);
    std::vector<VarSet> faces;
    for_each_subset(VarSet::full(n).bits(), [&](VarSet tau) {
        if (!contains(ideal, raised(low, tau))) faces.push_back(tau);
    });
    return SimplicialComplex::from_faces(n, std::move(faces));
}

std::size_t koszul_homology_dim(const MonomialIdeal& ideal, std::size_t i, const Multidegree& mu) {
    const auto n = ideal.ring_dimension();
    if (i > n) throw DimensionError("homological degree out of range");
    return reduced_homology(upper_complex(ideal, mu)).reduced(static_cast<int>(i) - 1);
}

std::size_t koszul_homology_dim_dual(const MonomialIdeal& ideal, std::size_t i, const Multidegree& mu) {
    const auto n = ideal.ring_dimension();
    if (i > n) throw DimensionError("homological degree out of range");
    const auto supp = support_of(mu);
    const auto restricted = lower_complex(ideal, mu).induced(supp);
    const int k = static_cast<int>(supp.size()) - static_cast<int>(i) - 2;
    return reduced_homology(restricted).reduced(k);
}

// --- corners --------------------------------------------------------------

bool is_closed_corner(const MonomialIdeal& ideal, const Multidegree& mu) {
    require_same_dimension(ideal.ring_dimension(), mu.size(), "is_closed_corner");
    auto low = lowered(mu);
    if (contains(ideal, low)) return false;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] == 0) continue;
        ++low[i];
        const bool inside = contains(ideal, low);
        --low[i];
        if (!inside) return false;
    }
    return true;
}

bool is_maximal_corner(const MonomialIdeal& ideal, const Multidegree& mu) {
    require_same_dimension(ideal.ring_dimension(), mu.size(), "is_maximal_corner");
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] == 0) return false;
    }
    return is_closed_corner(ideal, mu);
}

std::vector<VarSet> lfd(const MonomialIdeal& ideal, const Multidegree& mu) {
    return lower_complex(ideal, mu).facets();
}

std::vector<VarSet> gfd(const MonomialIdeal& ideal, const Multidegree& mu) {
    const auto n = ideal.ring_dimension();
    require_same_dimension(n, mu.size(), "gfd");
    require_materializable(n);
    if (ideal.is_zero()) {
        if (n == 0) return {};
        return {VarSet::full(n)};
    }
    const auto base = contains(ideal, mu) ? lowered(mu) : mu;
    if (contains(ideal, base)) return {};

    // Membership only depends on exponents capped at lambda_i + 1, so pushing
    // every direction of D to lambda_i + 1 decides the whole cone at once.
    const auto lambda = lcm_lambda(ideal);
    std::unordered_set<std::uint64_t> free_sets;
    for_each_subset(VarSet::full(n).bits(), [&](VarSet d) {
        if (d.empty()) return;
        Multidegree far = base;
        for (auto i : d.indices()) {
            if (lambda[i] == std::numeric_limits<Exponent>::max()) throw OverflowError("exponent overflow");
            far[i] = std::max<Exponent>(far[i], lambda[i] + 1);
        }
        if (!contains(ideal, far)) free_sets.insert(d.bits());
    });
    std::vector<VarSet> out;
    for (auto bits : free_sets) {
        const VarSet d(bits);
        bool maximal = true;
        for (std::size_t v = 0; v < n && maximal; ++v) {
            if (!d.contains(v) && free_sets.contains(d.with(v).bits())) maximal = false;
        }
        if (maximal) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kozmo
