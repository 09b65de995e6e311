#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace vclab {

inline constexpr double kPowerLikeR2 = 0.98;

struct ProfileSample {
    std::size_t t = 0;
    std::uint64_t value = 0;
    bool exact = true;
};

/// Measured (t, π(t)) pairs; t strictly increasing, values nondecreasing and at most 2^t.
class ShatterProfile {
public:
    ShatterProfile() = default;
    ShatterProfile(std::vector<ProfileSample> samples, std::string source = {});

    const std::vector<ProfileSample>& samples() const noexcept { return samples_; }
    const std::string& source() const noexcept { return source_; }
    std::size_t size() const noexcept { return samples_.size(); }

    std::string to_csv() const;
    static ShatterProfile from_csv(const std::string& text, std::string source = {});

private:
    std::vector<ProfileSample> samples_;
    std::string source_;
};

inline constexpr const char* kProfileCsvHeader = "t,value,exact";

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    std::size_t t_lo = 0;
    std::size_t t_hi = 0;
    std::size_t used = 0;
    std::vector<std::string> warnings;
};

/// Least squares of log(value) on log(t) over exact samples with t >= t_min.
/// The slope is a finite-range proxy for the growth exponent. Samples with
/// t = 0 or value = 0 are skipped with a warning. Lower-bound samples make
/// the fit refuse unless `force` is set.
FitResult fit_exponent(const ShatterProfile& profile, std::size_t t_min = 1, bool force = false);

enum class GrowthKind { power_like, exponential_so_far, inconclusive };

struct GrowthClass {
    GrowthKind kind = GrowthKind::inconclusive;
    double slope = 0.0;  // meaningful for power_like
    double r2 = 0.0;
};

GrowthClass classify_growth(const ShatterProfile& profile, double r2_threshold = kPowerLikeR2);

std::string to_string(GrowthKind kind);

}  // namespace vclab
