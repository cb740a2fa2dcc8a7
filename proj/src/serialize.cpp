#include "dotoep/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace dotoep {

std::string format_sig(double v, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
  return buf;
}

std::string to_csv(const CoeffVector& cv) {
  std::ostringstream os;
  os << "k,coeff\n";
  for (int k = 0; k < cv.size(); ++k) {
    os << k << "," << format_sig(cv.coeffs[static_cast<size_t>(k)], 17) << "\n";
  }
  return os.str();
}

nlohmann::json to_json(const CoeffVector& cv) {
  return nlohmann::json{{"coeffs", cv.coeffs},
                        {"engine", engine_name(cv.engine)},
                        {"abs_tol", cv.abs_tol}};
}

std::string first_col_csv(const SymToeplitz& T) {
  std::ostringstream os;
  os << "k,value\n";
  for (int k = 0; k < T.order(); ++k) {
    os << k << "," << format_sig(T.coeff(k), 17) << "\n";
  }
  return os.str();
}

nlohmann::json to_json(const SymToeplitz& T) {
  return nlohmann::json{{"n", T.order()}, {"first_col", T.first_col()}};
}

std::string dense_csv(const SymToeplitz& T) {
  std::ostringstream os;
  const int n = T.order();
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      os << format_sig(T(s, t), 17) << (t + 1 == n ? "\n" : ",");
    }
  }
  return os.str();
}

nlohmann::json to_json(const SpectrumReport& rep) {
  nlohmann::json j{{"n", rep.n},
                   {"lambda_min", rep.lambda_min},
                   {"lambda_max", rep.lambda_max},
                   {"mu2", rep.mu2},
                   {"scaled", rep.scaled}};
  if (rep.full_spectrum) j["full_spectrum"] = *rep.full_spectrum;
  return j;
}

std::string csv_row(const SpectrumReport& rep) {
  const bool dagger = rep.scaled.count("lambda_min_dagger") > 0;
  const std::string lmin_s = dagger ? "lambda_min_dagger" : "lambda_min_star";
  const std::string lmax_s = dagger ? "lambda_max_dagger" : "lambda_max_star";
  const std::string mu_s = dagger ? "mu2_dagger" : "mu2_star";
  std::ostringstream os;
  os << rep.n << "," << format_sig(rep.lambda_min) << "," << format_sig(rep.scaled.at(lmin_s))
     << "," << format_sig(rep.lambda_max) << "," << format_sig(rep.scaled.at(lmax_s)) << ","
     << format_sig(rep.mu2) << "," << format_sig(rep.scaled.at(mu_s));
  return os.str();
}

nlohmann::json to_json(const BoundReport& rep) {
  return nlohmann::json{{"name", rep.name},   {"lhs", rep.lhs},       {"rhs", rep.rhs},
                        {"margin", rep.margin}, {"passed", rep.passed}, {"params", rep.params}};
}

std::string summary_csv(const std::vector<BoundReport>& reps) {
  std::ostringstream os;
  os << "name,lhs,rhs,margin,passed\n";
  for (const BoundReport& r : reps) {
    os << r.name << "," << format_sig(r.lhs, 12) << "," << format_sig(r.rhs, 12) << ","
       << format_sig(r.margin, 12) << "," << (r.passed ? "1" : "0") << "\n";
  }
  return os.str();
}

std::string summary_text(const std::vector<BoundReport>& reps) {
  std::ostringstream os;
  for (const BoundReport& r : reps) {
    os << (r.passed ? "[pass] " : "[FAIL] ") << r.name << "  lhs=" << format_sig(r.lhs)
       << " rhs=" << format_sig(r.rhs) << " margin=" << format_sig(r.margin) << "\n";
  }
  return os.str();
}

}  // namespace dotoep
