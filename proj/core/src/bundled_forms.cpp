#include "halfint/bundled_forms.hpp"

#include "halfint/errors.hpp"

namespace halfint {

EtaQuotient half_integral_quotient() { return {4, {{1, -2}, {2, 17}, {4, -2}}}; }

EtaQuotient basis_quotient() { return {4, {{2, 12}}}; }

FormValidation validate_form(const FourierExpansion& f, double tol) {
  FormValidation v;
  std::vector<GroupElement> gens = {GroupElement::from(1, 1, 0, 1), GroupElement::from(1, 0, f.level, 1)};
  v.modularity = check_modularity(f, gens, tol);
  v.pass = v.modularity.pass;
  if (f.fricke_eigenvalue) {
    v.fricke = check_fricke(f, 10, tol);
    v.pass = v.pass && v.fricke->pass;
  }
  return v;
}

FourierExpansion with_validation(FourierExpansion f, FormValidation* report, double tol) {
  FormValidation v = validate_form(f, tol);
  f.status = v.pass ? FormStatus::Validated : FormStatus::Rejected;
  if (report) *report = v;
  return f;
}

std::vector<std::string> bundled_names() { return {"f13", "g6"}; }

FourierExpansion bundled_form(const std::string& name, int M) {
  FourierExpansion f;
  if (name == "f13") {
    f = eta_expansion(half_integral_quotient(), M);
  } else if (name == "g6") {
    f = eta_expansion(basis_quotient(), M);
  } else {
    throw DomainError("unknown bundled form '" + name + "'");
  }
  f.label = name;
  return with_validation(std::move(f));
}

}  // namespace halfint
