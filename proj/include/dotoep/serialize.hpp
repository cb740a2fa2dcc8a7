#ifndef DOTOEP_SERIALIZE_HPP
#define DOTOEP_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "dotoep/analysis.hpp"
#include "dotoep/spectra.hpp"
#include "dotoep/symbols.hpp"
#include "dotoep/toeplitz.hpp"

// CSV and JSON emitters for the value types.  CSV numbers print with six
// significant digits; JSON keeps full precision.

namespace dotoep {

std::string format_sig(double v, int significant = 6);

std::string to_csv(const CoeffVector& cv);                 // "k,coeff" rows
nlohmann::json to_json(const CoeffVector& cv);

std::string first_col_csv(const SymToeplitz& T);           // "k,value" rows
nlohmann::json to_json(const SymToeplitz& T);
std::string dense_csv(const SymToeplitz& T);               // row-major, small n debug

nlohmann::json to_json(const SpectrumReport& rep);
// column order: n, lambda_min, lambda*_min, lambda_max, lambda*_max, mu2, mu*_2
std::string csv_row(const SpectrumReport& rep);

nlohmann::json to_json(const BoundReport& rep);
std::string summary_csv(const std::vector<BoundReport>& reps);
std::string summary_text(const std::vector<BoundReport>& reps);

}  // namespace dotoep

#endif  // DOTOEP_SERIALIZE_HPP
