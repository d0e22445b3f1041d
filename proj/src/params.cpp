#include "netload/params.hpp"

#include <cmath>
#include <stdexcept>

namespace netload {

double lambda_eval(LambdaClass cls, int n) {
    if (n < 1) throw std::invalid_argument("lambda_eval needs n >= 1");
    switch (cls) {
        case LambdaClass::Const: return 1.0;
        case LambdaClass::SqrtN: return std::sqrt(static_cast<double>(n));
        case LambdaClass::LinearN: return static_cast<double>(n);
    }
    throw std::logic_error("unreachable lambda class");
}

const char* lambda_name(LambdaClass cls) {
    switch (cls) {
        case LambdaClass::Const: return "const";
        case LambdaClass::SqrtN: return "sqrt";
        case LambdaClass::LinearN: return "linear";
    }
    throw std::logic_error("unreachable lambda class");
}

LambdaClass lambda_from_name(const std::string& name) {
    if (name == "const") return LambdaClass::Const;
    if (name == "sqrt") return LambdaClass::SqrtN;
    if (name == "linear") return LambdaClass::LinearN;
    throw std::invalid_argument("unknown lambda class: " + name);
}

void validate_params(const ExponentParams& p) {
    auto ok = [](double v) { return std::isfinite(v) && v >= 0.0; };
    if (!ok(p.geography) || !ok(p.influence) || !ok(p.separation) || !ok(p.destination))
        throw std::invalid_argument("exponents must be finite and >= 0");
}

} // namespace netload
