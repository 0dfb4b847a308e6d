#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fracl1/scheme.hpp"

namespace fracl1::subdiff {

using SpaceFn = std::function<double(double)>;
using SpaceTimeFn = std::function<double(double, double)>;

/// d^alpha u / dt^alpha = u_xx + F(x,t) on [0,x_max] x [0,t_max] with
/// u(x,0) = u0(x), u(0,t) = uL(t), u(x_max,t) = uR(t).
struct SubdiffusionProblem {
    std::string name = "custom";
    double alpha = 0.5;
    double x_max = 1.0;
    double t_max = 1.0;
    SpaceTimeFn forcing;
    SpaceFn u0;
    SpaceFn uL;
    SpaceFn uR;
    SpaceTimeFn exact;  // empty when unknown

    bool has_exact() const { return static_cast<bool>(exact); }
    /// Checks the domain and the corner compatibility u0(0) = uL(0),
    /// u0(x_max) = uR(0) (within 1e-10).
    void validate() const;
};

/// Which time levels a grid norm covers.
enum class LevelNorm { AllLevels, FinalLevel };

/// Grid values U[m][n] ~ u(n h, m tau), m = 0..M (time levels), n = 0..N.
class GridSolution {
public:
    GridSolution(std::size_t N, std::size_t M, double h, double tau);

    std::size_t nodes() const noexcept { return N_; }   // N (last space index)
    std::size_t levels() const noexcept { return M_; }  // M (last time index)
    double h() const noexcept { return h_; }
    double tau() const noexcept { return tau_; }

    double& at(std::size_t m, std::size_t n) { return data_[m * (N_ + 1) + n]; }
    double at(std::size_t m, std::size_t n) const { return data_[m * (N_ + 1) + n]; }
    std::span<double> row(std::size_t m) { return {data_.data() + m * (N_ + 1), N_ + 1}; }
    std::span<const double> row(std::size_t m) const {
        return {data_.data() + m * (N_ + 1), N_ + 1};
    }

    /// Maximum |U - u| over interior nodes, at every time level or at the
    /// final one.
    double max_error(const SpaceTimeFn& exact, LevelNorm norm = LevelNorm::AllLevels) const;

private:
    std::size_t N_, M_;
    double h_, tau_;
    std::vector<double> data_;
};

/// Maximum difference between a coarse grid and a finer grid on the coarse
/// nodes (interior nodes, every coarse time level or only the final one). The
/// fine grid's N and M must be integer multiples of the coarse ones.
double max_gap(const GridSolution& coarse, const GridSolution& fine,
               LevelNorm norm = LevelNorm::AllLevels);

struct SubdiffOptions {
    /// The caller certifies u(x,0) = u_t(x,0) = 0, so the interior of time
    /// level 1 may be set to zero instead of solved for.
    bool zero_first_level = false;
};

/// Standard implicit scheme with L1 or ML1 time weights. The ML1 variant uses
/// L1 weights on the first level. N >= 3, M >= 2.
GridSolution solve_subdiff(Scheme scheme, const SubdiffusionProblem& p, std::size_t N,
                           std::size_t M, const SubdiffOptions& opts = {});

/// Three-point compact scheme. Level 1 comes from the ML1 scheme unless
/// `level1` supplies it (full row of N+1 values) or `opts` zeroes it.
/// N >= 3, M >= 3.
GridSolution solve_subdiff_cml1(const SubdiffusionProblem& p, std::size_t N, std::size_t M,
                                std::optional<std::span<const double>> level1 = std::nullopt,
                                const SubdiffOptions& opts = {});

/// Dispatch on the scheme.
GridSolution solve(Scheme scheme, const SubdiffusionProblem& p, std::size_t N, std::size_t M,
                   const SubdiffOptions& opts = {});

enum class CatalogId { S05, S06, S15, S16 };

CatalogId parse_catalog_id(std::string_view name);
std::string_view to_string(CatalogId id);

/// S05: polynomial-in-x solution (1+2x^2+3x^3) t^(3-alpha) on [0,1]^2.
/// S06: sin x E_alpha(-t^alpha) on [0,pi]^2.
/// S15/S16: S06 at alpha = 0.5 with the degree 4 / degree 5 fractional Taylor
/// polynomial in t removed (zero initial and boundary data).
SubdiffusionProblem catalog_subdiff(CatalogId id, double alpha);

}  // namespace fracl1::subdiff
