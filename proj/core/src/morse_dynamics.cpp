#include "lexmorse/morse_dynamics.hpp"

#include "lexmorse/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace lexmorse {

namespace {

void check_endpoints(const AcyclicMatching& m, std::size_t tau, std::size_t sigma) {
    const auto& fx = m.faces();
    if (fx.dim(tau) != fx.dim(sigma) + 1)
        throw Error(ErrorCode::DimensionMismatch, "gradient paths need dim tau = dim sigma + 1, got " +
                                                      std::to_string(fx.dim(tau)) + " and " + std::to_string(fx.dim(sigma)));
    if (!m.is_critical(tau) || !m.is_critical(sigma))
        throw Error(ErrorCode::InvalidArgument, "gradient path endpoints must be critical");
}

// Paths from a lower face s to sigma, memoized; the flow is acyclic so this terminates.
class PathCounter {
public:
    PathCounter(const AcyclicMatching& m, std::size_t sigma) : m_(m), sigma_(sigma) {}

    unsigned long long from(std::size_t s) {
        if (s == sigma_) return 1;
        if (auto it = memo_.find(s); it != memo_.end()) return it->second;
        unsigned long long total = 0;
        const auto& fx = m_.faces();
        if (auto up = m_.mate(s); up && fx.dim(*up) > fx.dim(s))
            for (std::size_t s2 : fx.boundary(*up))
                if (s2 != s) total += from(s2);
        memo_.emplace(s, total);
        return total;
    }

private:
    const AcyclicMatching& m_;
    std::size_t sigma_;
    std::unordered_map<std::size_t, unsigned long long> memo_;
};

}  // namespace

unsigned long long count_gradient_paths(const AcyclicMatching& m, std::size_t tau, std::size_t sigma) {
    check_endpoints(m, tau, sigma);
    PathCounter counter(m, sigma);
    unsigned long long total = 0;
    for (std::size_t s : m.faces().boundary(tau)) total += counter.from(s);
    return total;
}

std::vector<GradientPath> enumerate_gradient_paths(const AcyclicMatching& m, std::size_t tau, std::size_t sigma,
                                                   std::size_t max_paths) {
    check_endpoints(m, tau, sigma);
    const auto& fx = m.faces();
    PathCounter counter(m, sigma);
    std::vector<GradientPath> out;
    GradientPath cur;

    auto descend = [&](auto&& self, std::size_t upper) -> void {
        const auto b = fx.boundary(upper);
        for (std::size_t k = 0; k < b.size(); ++k) {
            std::size_t s = b[k];
            if (!cur.steps.empty() && cur.steps.size() >= 2 && cur.steps[cur.steps.size() - 2] == s) continue;
            if (counter.from(s) == 0) continue;
            cur.steps.push_back(s);
            cur.deleted_ranks.push_back(fx.rank_in_fibre(upper, fx.face(upper)[k]));
            if (s == sigma) {
                out.push_back(cur);
                if (max_paths != 0 && out.size() > max_paths)
                    throw Error(ErrorCode::BoundExceeded, "more than " + std::to_string(max_paths) + " gradient paths");
            } else {
                std::size_t next = *m.mate(s);
                cur.steps.push_back(next);
                self(self, next);
                cur.steps.pop_back();
            }
            cur.steps.pop_back();
            cur.deleted_ranks.pop_back();
        }
    };
    cur.steps.push_back(tau);
    descend(descend, tau);
    return out;
}

AcyclicMatching cancel_pair(const AcyclicMatching& m, std::size_t tau, std::size_t sigma) {
    auto n = count_gradient_paths(m, tau, sigma);
    if (n != 1) throw Error(ErrorCode::NotUnique, std::to_string(n) + " gradient paths between the pair");
    auto paths = enumerate_gradient_paths(m, tau, sigma);
    AcyclicMatching out = m;
    const auto& steps = paths.front().steps;
    for (std::size_t t = 0; t + 1 < steps.size(); t += 2) out.pair(steps[t], steps[t + 1]);
    return out;
}

RankPreservation check_rank_preservation(const AcyclicMatching& m, std::size_t tau, std::size_t sigma, int r) {
    RankPreservation rep;
    if (r <= 0) return rep;
    for (auto& p : enumerate_gradient_paths(m, tau, sigma)) {
        for (int d : p.deleted_ranks) {
            if (d <= r) {
                rep.holds = false;
                rep.offending_rank = d;
                rep.witness = std::move(p);
                return rep;
            }
        }
    }
    return rep;
}

int agreement_prefix(const FaceIndex& fx, std::size_t a, std::size_t b) {
    const auto& fa = fx.facets()[fx.fibre(a)];
    const auto& fb = fx.facets()[fx.fibre(b)];
    auto mm = std::mismatch(fa.begin(), fa.end(), fb.begin(), fb.end());
    return static_cast<int>(mm.first - fa.begin());
}

}  // namespace lexmorse
