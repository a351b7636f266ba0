#include "wqed/params.hpp"

#include <cmath>
#include <string>

namespace wqed {

void SystemParams::validate() const {
    for (double b : {beta_r, beta_l, beta_s}) {
        if (b < 0.0 || b > 1.0 || !std::isfinite(b))
            throw InvalidParams("branching ratio out of [0,1]: " + std::to_string(b));
    }
    if (std::abs(beta_r + beta_l + beta_s - 1.0) > 1e-12)
        throw InvalidParams("branching ratios must sum to 1 (got " +
                            std::to_string(beta_r + beta_l + beta_s) + ")");
    if (!std::isfinite(delta)) throw InvalidParams("detuning must be finite");
}

double channel_beta(const SystemParams& p, Channel ch) {
    switch (ch) {
        case Channel::R: return p.beta_r;
        case Channel::L: return p.beta_l;
        case Channel::S: return p.beta_s;
    }
    return 0.0;
}

void ChainParams::validate() const {
    emitter().validate();
    if (n < 1) throw InvalidParams("need at least one emitter");
    if (static_cast<int>(phases.size()) != n)
        throw InvalidParams("phases must have one entry per emitter");
    for (int j = 1; j < n; ++j) {
        if (phases[j] < phases[j - 1])
            throw InvalidParams("emitter phases must be nondecreasing");
    }
    for (double ph : phases)
        if (!std::isfinite(ph)) throw InvalidParams("emitter phase must be finite");
}

int ChainParams::pair_index(int j, int l) const {
    if (j < 0 || l <= j || l >= n) throw InvalidParams("bad pair index");
    // Row-major over rows j, columns l > j.
    return j * n - j * (j + 1) / 2 + (l - j - 1);
}

void TimeGrid::validate() const {
    if (n_steps < 2) throw InvalidParams("time grid needs at least 2 steps");
    if (!(zeta_end > zeta_start) || !std::isfinite(zeta_start) || !std::isfinite(zeta_end))
        throw InvalidParams("time grid must have zeta_end > zeta_start");
}

int TimeGrid::index_of(double z) const {
    const double step = h();
    const double x = (z - zeta_start) / step;
    const int i = static_cast<int>(std::lround(x));
    if (i < 0 || i > n_steps || std::abs(x - i) > 1e-9)
        throw InvalidParams("time " + std::to_string(z) + " is not a grid node");
    return i;
}

}  // namespace wqed
