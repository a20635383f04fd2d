#include "eqsteenrod/koszul.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace eqsteenrod {

std::string ROC2Degree::to_string() const {
    std::ostringstream out;
    out << "(" << c << "," << s << ")";
    return out.str();
}

bool is_mersenne(std::int64_t i) { return i >= 1 && std::has_single_bit(static_cast<std::uint64_t>(i) + 1); }

PolyGenerators::PolyGenerators(std::vector<PolyGenerator> gens) : gens_(std::move(gens)) {
    std::ranges::sort(gens_, {}, &PolyGenerator::index);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const PolyGenerator& g = gens_[i];
        if (i > 0 && gens_[i - 1].index == g.index) throw std::invalid_argument("duplicate generator index");
        if (g.r_degree.dim() <= 0 || g.m_degree.dim() <= 0) {
            throw std::invalid_argument("generator degrees must have positive underlying dimension");
        }
        if (g.hurewicz_nonzero && g.r_degree != g.m_degree) {
            throw std::invalid_argument("Hurewicz image must have the degree of its source");
        }
    }
}

PolyGenerators PolyGenerators::standard(int n) {
    std::vector<PolyGenerator> gens;
    for (int i = 1; i <= n; ++i) {
        gens.push_back({i, ROC2Degree::rho_multiple(i), ROC2Degree::rho_multiple(i), !is_mersenne(i)});
    }
    return PolyGenerators(std::move(gens));
}

PolyGenerators PolyGenerators::all_nonzero(int n) {
    std::vector<PolyGenerator> gens;
    for (int i = 1; i <= n; ++i) gens.push_back({i, ROC2Degree::rho_multiple(i), ROC2Degree::rho_multiple(i), true});
    return PolyGenerators(std::move(gens));
}

PolyGenerators PolyGenerators::only(const std::vector<int>& indices) {
    std::vector<PolyGenerator> gens;
    for (int i : indices) {
        if (i < 1) throw std::invalid_argument("generator indices start at 1");
        gens.push_back({i, ROC2Degree::rho_multiple(i), ROC2Degree::rho_multiple(i), !is_mersenne(i)});
    }
    return PolyGenerators(std::move(gens));
}

PolyGenerators PolyGenerators::restricted_to(int max_index) const {
    std::vector<PolyGenerator> kept;
    for (const auto& g : gens_) {
        if (g.index <= max_index) kept.push_back(g);
    }
    return PolyGenerators(std::move(kept));
}

bool monomial_order_less(const KoszulMonomial& x, const KoszulMonomial& y) {
    if (x.exterior != y.exterior) return x.exterior < y.exterior;
    const int tx = std::accumulate(x.exponents.begin(), x.exponents.end(), 0);
    const int ty = std::accumulate(y.exponents.begin(), y.exponents.end(), 0);
    if (tx != ty) return tx < ty;
    return x.exponents > y.exponents;
}

const KoszulComplex::Block* KoszulComplex::block(const Bidegree& b) const {
    auto it = blocks_.find(b);
    return it == blocks_.end() ? nullptr : &it->second;
}

ROC2Degree KoszulComplex::internal_degree(const KoszulMonomial& m) const {
    ROC2Degree d;
    for (int p : m.exterior) d += gens_[static_cast<std::size_t>(p)].r_degree;
    for (std::size_t p = 0; p < m.exponents.size(); ++p) d += m.exponents[p] * gens_[p].m_degree;
    return d;
}

std::string KoszulComplex::monomial_name(const KoszulMonomial& m) const {
    std::ostringstream out;
    bool any = false;
    for (std::size_t p = 0; p < m.exponents.size(); ++p) {
        if (m.exponents[p] == 0) continue;
        out << "m" << gens_[p].index;
        if (m.exponents[p] > 1) out << "^" << m.exponents[p];
        any = true;
    }
    for (int p : m.exterior) {
        out << "e" << gens_[static_cast<std::size_t>(p)].index;
        any = true;
    }
    return any ? out.str() : "1";
}

bool KoszulComplex::differential_squares_to_zero() const {
    for (const auto& [bd, blk] : blocks_) {
        if (bd.homological < 2) continue;
        const Block* below = block(Bidegree{bd.internal, bd.homological - 1});
        if (below == nullptr) continue;
        const gf2::BitMatrix product = multiply(below->differential.to_dense(), blk.differential.to_dense());
        if (!product.is_zero()) return false;
    }
    return true;
}

std::map<ROC2Degree, std::int64_t> KoszulComplex::euler_characteristics() const {
    std::map<ROC2Degree, std::int64_t> chi;
    for (const auto& [bd, blk] : blocks_) {
        const auto size = static_cast<std::int64_t>(blk.basis.size());
        chi[bd.internal] += (bd.homological % 2 == 0) ? size : -size;
    }
    return chi;
}

namespace {

using MonomialKey = std::pair<std::vector<int>, std::vector<int>>;

}  // namespace

KoszulComplex build_complex(const PolyGenerators& gens, int n, std::int64_t cutoff, std::size_t bound) {
    if (n < 0) throw std::invalid_argument("generator bound must be >= 0");
    if (cutoff < 0) throw std::invalid_argument("dimension cutoff must be >= 0");

    KoszulComplex cx;
    cx.cutoff_ = cutoff;
    const PolyGenerators kept = gens.restricted_to(n);
    for (const auto& g : kept.generators()) {
        // A generator above the cutoff can never appear in a monomial.
        if (g.r_degree.dim() <= cutoff || g.m_degree.dim() <= cutoff) cx.gens_.push_back(g);
    }
    const std::size_t count = cx.gens_.size();

    std::map<Bidegree, std::vector<KoszulMonomial>> collected;
    KoszulMonomial current{{}, std::vector<int>(count, 0)};

    auto add_polynomial = [&](auto&& self, std::size_t pos, std::int64_t used) -> void {
        if (pos == count) {
            const Bidegree bd{cx.internal_degree(current), static_cast<int>(current.exterior.size())};
            auto& list = collected[bd];
            list.push_back(current);
            if (list.size() > bound) {
                throw BlowupError("bidegree " + bd.internal.to_string() + "," + std::to_string(bd.homological) +
                                  " exceeds the monomial bound of " + std::to_string(bound));
            }
            return;
        }
        const std::int64_t step = cx.gens_[pos].m_degree.dim();
        for (int e = 0; used + e * step <= cutoff; ++e) {
            current.exponents[pos] = e;
            self(self, pos + 1, used + e * step);
        }
        current.exponents[pos] = 0;
    };

    auto add_exterior = [&](auto&& self, std::size_t pos, std::int64_t used) -> void {
        if (pos == count) {
            add_polynomial(add_polynomial, 0, used);
            return;
        }
        self(self, pos + 1, used);
        const std::int64_t step = cx.gens_[pos].r_degree.dim();
        if (used + step <= cutoff) {
            current.exterior.push_back(static_cast<int>(pos));
            self(self, pos + 1, used + step);
            current.exterior.pop_back();
        }
    };
    add_exterior(add_exterior, 0, 0);

    std::map<Bidegree, std::map<MonomialKey, std::size_t>> index;
    for (auto& [bd, list] : collected) {
        std::ranges::sort(list, monomial_order_less);
        auto& idx = index[bd];
        for (std::size_t i = 0; i < list.size(); ++i) idx.emplace(MonomialKey{list[i].exterior, list[i].exponents}, i);
    }

    for (auto& [bd, list] : collected) {
        KoszulComplex::Block blk;
        const Bidegree target{bd.internal, bd.homological - 1};
        const auto target_it = index.find(target);
        const std::size_t target_size = target_it == index.end() ? 0 : target_it->second.size();
        blk.differential = gf2::SparseMatrix(target_size, list.size());
        for (std::size_t col = 0; col < list.size(); ++col) {
            const KoszulMonomial& m = list[col];
            for (std::size_t k = 0; k < m.exterior.size(); ++k) {
                const auto p = static_cast<std::size_t>(m.exterior[k]);
                if (!cx.gens_[p].hurewicz_nonzero) continue;
                MonomialKey key{m.exterior, m.exponents};
                key.first.erase(key.first.begin() + static_cast<std::ptrdiff_t>(k));
                ++key.second[p];
                blk.differential.add(target_it->second.at(key), col);
            }
        }
        blk.basis = std::move(list);
        cx.blocks_.emplace(bd, std::move(blk));
    }
    return cx;
}

BigradedRanks homology_ranks(const KoszulComplex& cx) {
    std::map<Bidegree, std::int64_t> image_rank;
    for (const auto& [bd, blk] : cx.blocks()) {
        image_rank[bd] = bd.homological == 0 ? 0 : static_cast<std::int64_t>(blk.differential.rank());
    }
    BigradedRanks out;
    for (const auto& [bd, blk] : cx.blocks()) {
        const Bidegree above{bd.internal, bd.homological + 1};
        const auto it = image_rank.find(above);
        const std::int64_t incoming = it == image_rank.end() ? 0 : it->second;
        const std::int64_t h = static_cast<std::int64_t>(blk.basis.size()) - image_rank[bd] - incoming;
        if (h != 0) out[bd] = h;
    }
    return out;
}

BigradedRanks expected_ranks(int n, std::int64_t cutoff) {
    if (n < 0 || cutoff < 0) throw std::invalid_argument("expected_ranks needs n >= 0 and cutoff >= 0");
    std::vector<std::int64_t> js;
    for (std::int64_t j = 1; j <= n && 2 * j <= cutoff; j = 2 * j + 1) js.push_back(j);

    BigradedRanks out;
    auto poly = [&](auto&& self, std::size_t pos, std::int64_t weight, int s) -> void {
        if (pos == js.size()) {
            ++out[Bidegree{ROC2Degree::rho_multiple(weight), s}];
            return;
        }
        for (std::int64_t w = weight; 2 * w <= cutoff; w += js[pos]) self(self, pos + 1, w, s);
    };
    const std::size_t count = js.size();
    for (std::uint32_t subset = 0; subset < (1U << count); ++subset) {
        std::int64_t weight = 0;
        for (std::size_t p = 0; p < count; ++p) {
            if (subset & (1U << p)) weight += js[p];
        }
        if (2 * weight > cutoff) continue;
        poly(poly, 0, weight, std::popcount(subset));
    }
    return out;
}

std::map<ROC2Degree, std::int64_t> euler_characteristics(const BigradedRanks& ranks) {
    std::map<ROC2Degree, std::int64_t> chi;
    for (const auto& [bd, r] : ranks) chi[bd.internal] += (bd.homological % 2 == 0) ? r : -r;
    return chi;
}

std::map<ROC2Degree, std::int64_t> collapse_homological(const BigradedRanks& ranks) {
    std::map<ROC2Degree, std::int64_t> out;
    for (const auto& [bd, r] : ranks) out[bd.internal + ROC2Degree{bd.homological, 0}] += r;
    return out;
}

}  // namespace eqsteenrod
