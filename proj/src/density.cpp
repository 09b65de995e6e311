#include "vclab/density.hpp"

#include <cmath>
#include <sstream>

#include "vclab/error.hpp"

namespace vclab {

ShatterProfile::ShatterProfile(std::vector<ProfileSample> samples, std::string source)
    : samples_(std::move(samples)), source_(std::move(source)) {
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const auto& s = samples_[i];
        if (s.t < 64 && s.value > (std::uint64_t{1} << s.t)) {
            throw InputShapeError("profile value " + std::to_string(s.value) + " exceeds 2^" + std::to_string(s.t));
        }
        if (i > 0) {
            if (s.t <= samples_[i - 1].t) throw InputShapeError("profile t values must be strictly increasing");
            if (s.value < samples_[i - 1].value) throw InputShapeError("profile values must be nondecreasing");
        }
    }
}

std::string ShatterProfile::to_csv() const {
    std::string out = std::string(kProfileCsvHeader) + "\n";
    for (const auto& s : samples_) {
        out += std::to_string(s.t) + "," + std::to_string(s.value) + "," + (s.exact ? "1" : "0") + "\n";
    }
    return out;
}

ShatterProfile ShatterProfile::from_csv(const std::string& text, std::string source) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kProfileCsvHeader) {
        throw ParseError(std::string("profile CSV must start with header '") + kProfileCsvHeader + "'");
    }
    std::vector<ProfileSample> samples;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        ProfileSample s;
        char c1 = 0;
        char c2 = 0;
        int exact = -1;
        std::istringstream row(line);
        if (!(row >> s.t >> c1 >> s.value >> c2 >> exact) || c1 != ',' || c2 != ',' || (exact != 0 && exact != 1)) {
            throw ParseError("malformed profile row " + std::to_string(lineno) + ": '" + line + "'");
        }
        s.exact = exact == 1;
        samples.push_back(s);
    }
    return ShatterProfile(std::move(samples), std::move(source));
}

FitResult fit_exponent(const ShatterProfile& profile, std::size_t t_min, bool force) {
    FitResult fit;
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& s : profile.samples()) {
        if (s.t < t_min) continue;
        if (!s.exact) {
            if (!force) {
                throw PreconditionError("profile sample t=" + std::to_string(s.t) +
                                        " is a lower bound; refusing to fit without force");
            }
            fit.warnings.push_back("t=" + std::to_string(s.t) + " is a lower bound");
        }
        if (s.t == 0 || s.value == 0) {
            fit.warnings.push_back("skipped t=" + std::to_string(s.t) + " (log undefined)");
            continue;
        }
        if (xs.empty()) fit.t_lo = s.t;
        fit.t_hi = s.t;
        xs.push_back(std::log(static_cast<double>(s.t)));
        ys.push_back(std::log(static_cast<double>(s.value)));
    }
    fit.used = xs.size();
    if (xs.size() < 3) {
        throw PreconditionError("fit_exponent needs at least 3 usable samples, got " + std::to_string(xs.size()));
    }
    const auto n = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss_res += r * r;
    }
    fit.r2 = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
    return fit;
}

GrowthClass classify_growth(const ShatterProfile& profile, double r2_threshold) {
    if (profile.size() < 2) throw PreconditionError("classify_growth needs at least 2 samples");
    GrowthClass out;
    bool full = true;
    for (const auto& s : profile.samples()) {
        if (s.t >= 64 || s.value != (std::uint64_t{1} << s.t)) full = false;
    }
    if (full) {
        out.kind = GrowthKind::exponential_so_far;
        return out;
    }
    try {
        const FitResult fit = fit_exponent(profile, 1);
        out.slope = fit.slope;
        out.r2 = fit.r2;
        out.kind = fit.r2 >= r2_threshold ? GrowthKind::power_like : GrowthKind::inconclusive;
    } catch (const PreconditionError&) {
        out.kind = GrowthKind::inconclusive;
    }
    return out;
}

std::string to_string(GrowthKind kind) {
    switch (kind) {
        case GrowthKind::power_like: return "power_like";
        case GrowthKind::exponential_so_far: return "exponential_so_far";
        case GrowthKind::inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace vclab
