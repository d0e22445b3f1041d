#pragma once

#include <string>

namespace netload {

// Exponents of the four generation mechanisms. Geography is fixed at 0 here
// (uniform placement); the theory tables reject anything else.
struct ExponentParams {
    double geography = 0.0;   // g
    double influence = 0.0;   // i
    double separation = 0.0;  // s
    double destination = 0.0; // d
};

// Growth class of the per-node data arrival rate.
enum class LambdaClass { Const, SqrtN, LinearN };

double lambda_eval(LambdaClass cls, int n);
const char* lambda_name(LambdaClass cls);
LambdaClass lambda_from_name(const std::string& name); // "const" | "sqrt" | "linear"

void validate_params(const ExponentParams& params);

} // namespace netload
