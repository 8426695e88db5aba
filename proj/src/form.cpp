#include "hpt/form.hpp"

#include <cmath>

namespace hpt {

Form scale_pointwise(const Form& a, const Form& scalar, bool divide) {
    if (scalar.degree() != 0) throw DegreeError("scale_pointwise: scalar must be a 0-form");
    if (!(a.grid() == scalar.grid())) throw GridMismatchError("scale_pointwise: grid mismatch");
    Form out(a.grid(), a.degree());
    const auto& s = scalar.component(0);
    for (int c = 0; c < a.components(); ++c) {
        const auto& ac = a.component(c);
        auto& oc = out.component(c);
        if (divide) {
            for (size_t i = 0; i < ac.size(); ++i) oc[i] = ac[i] / s[i];
        } else {
            for (size_t i = 0; i < ac.size(); ++i) oc[i] = ac[i] * s[i];
        }
    }
    return out;
}

Form pointwise_exp(const Form& f) {
    if (f.degree() != 0) throw DegreeError("pointwise_exp expects a 0-form");
    Form out = f;
    for (double& v : out.component(0)) v = std::exp(v);
    return out;
}

Form pointwise_log(const Form& f) {
    if (f.degree() != 0) throw DegreeError("pointwise_log expects a 0-form");
    Form out = f;
    for (double& v : out.component(0)) {
        if (!(v > 0.0)) throw DensityError("pointwise_log: field must be positive");
        v = std::log(v);
    }
    return out;
}

}  // namespace hpt
