#ifndef IGFV_RECON_SCHEME_HPP
#define IGFV_RECON_SCHEME_HPP

#include <string>

#include "core/errors.hpp"
#include "gradients/compact.hpp"

namespace igfv {

enum class BaseScheme { ig4, ig6, mp5, muscl_k3, c5 };

struct SchemeConfig {
    BaseScheme base = BaseScheme::ig4;
    bool bvd_enabled = true;     // pair the linear scheme with MP5 through BVD
    double kappa = 1.0 / 3.0;    // fixed by the reconstruction family
    double alpha_mp = 7.0;       // MP5 monotonicity parameter
    double eps_mp = 1e-20;       // smooth-region switching threshold

    bool uses_ig() const { return base == BaseScheme::ig4 || base == BaseScheme::ig6; }
    bool uses_mp5() const { return base == BaseScheme::mp5 || (uses_ig() && bvd_enabled); }
    CompactScheme compact() const {
        return base == BaseScheme::ig6 ? CompactScheme::cd6 : CompactScheme::cd4;
    }
};

inline SchemeConfig scheme_from_name(const std::string& s, bool multi_component) {
    SchemeConfig sc;
    // Monotonicity parameter: 7 for single-species IG+MP5 pairings, 4 for
    // plain MP5 and for every multi-component configuration.
    if (s == "ig4mp") {
        sc.base = BaseScheme::ig4;
        sc.bvd_enabled = true;
        sc.alpha_mp = multi_component ? 4.0 : 7.0;
    } else if (s == "ig6mp") {
        sc.base = BaseScheme::ig6;
        sc.bvd_enabled = true;
        sc.alpha_mp = multi_component ? 4.0 : 7.0;
    } else if (s == "mp5") {
        sc.base = BaseScheme::mp5;
        sc.bvd_enabled = false;
        sc.alpha_mp = 4.0;
    } else if (s == "ig4") {
        sc.base = BaseScheme::ig4;
        sc.bvd_enabled = false;
    } else if (s == "ig6") {
        sc.base = BaseScheme::ig6;
        sc.bvd_enabled = false;
    } else if (s == "c5") {
        sc.base = BaseScheme::c5;
        sc.bvd_enabled = false;
    } else if (s == "muscl") {
        sc.base = BaseScheme::muscl_k3;
        sc.bvd_enabled = false;
    } else {
        throw ConfigError("unknown scheme '" + s + "' (expected mp5|ig4mp|ig6mp|ig4|ig6|c5|muscl)");
    }
    return sc;
}

inline std::string scheme_name(const SchemeConfig& sc) {
    switch (sc.base) {
    case BaseScheme::ig4: return sc.bvd_enabled ? "ig4mp" : "ig4";
    case BaseScheme::ig6: return sc.bvd_enabled ? "ig6mp" : "ig6";
    case BaseScheme::mp5: return "mp5";
    case BaseScheme::muscl_k3: return "muscl";
    case BaseScheme::c5: return "c5";
    }
    return "?";
}

} // namespace igfv

#endif
