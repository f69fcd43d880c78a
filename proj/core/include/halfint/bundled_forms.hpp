#pragma once

#include <string>
#include <vector>

#include "halfint/eta_quotient.hpp"
#include "halfint/modular_forms.hpp"

namespace halfint {

inline constexpr int kDefaultTruncation = 300;

// eta(z)^{-2} eta(2z)^{17} eta(4z)^{-2}, weight 13/2 on Gamma_0(4).
EtaQuotient half_integral_quotient();
// eta(2z)^{12}, weight 6 on Gamma_0(4).
EtaQuotient basis_quotient();

struct FormValidation {
  ModularityReport modularity;
  std::optional<FrickeReport> fricke;
  bool pass = false;
};

// Runs check_modularity against T and (1,0;N,1) and the Fricke check; never trusts the source.
FormValidation validate_form(const FourierExpansion& f, double tol = 1e-9);

// Validated copy of f (status Validated or Rejected).
FourierExpansion with_validation(FourierExpansion f, FormValidation* report = nullptr, double tol = 1e-9);

std::vector<std::string> bundled_names();
// Loads, expands and validates a bundled form; a failed check yields status Rejected.
FourierExpansion bundled_form(const std::string& name, int M = kDefaultTruncation);

}  // namespace halfint
