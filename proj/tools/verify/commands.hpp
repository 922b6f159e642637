#pragma once

#include <string>

#include "ellpl/numeric_core.hpp"
#include "json.hpp"

namespace ellpl::verify {

struct EvalArgs {
    std::string function;
    std::string z = "0.3+0.1i";
    std::string w = "0.2+0.05i";
    std::string tau = "2i";
    int k = 2;
    int a = 1;
    int b = 0;
    int N = 4;
    int D = 2;
    int n = 1;
    int x = 1;
    int y = 0;
    std::string gamma = "1,0,0,1";
    std::string shift = "0,0";
    std::string kind = "plain";
};

// One function evaluation as a JSON object; module errors propagate.
nlohmann::ordered_json evaluate(const EvalArgs& e, const Precision& prec);

struct TableArgs {
    std::string function;
    double tau_re = 0.0;
    double im_from = 1.0;
    double im_to = 5.0;
    double im_step = 1.0;
    std::string z = "0.3+0.1i";
    int k = 3;
    int a = 1;
    int b = 0;
    int N = 3;
    int D = 2;
    int n = 1;
    std::string format = "csv";
};

// Values over tau = tau_re + i (im_from + r im_step), r = 0, 1, .. while <= im_to, as CSV with a
// one-line # header or as JSON.
std::string make_table(const TableArgs& t, const Precision& prec, const std::string& version);

}  // namespace ellpl::verify
