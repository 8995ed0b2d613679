#pragma once

#include <memory>
#include <string>
#include <vector>

namespace ahgm {

enum class ProfileKind { closed_form, tabulated };

// Largest positive root of rho^n + rho^{n-2} = 2m, the boundary area radius
// of the closed-form model (0 when m = 0).  Root residual <= 1e-12.
double horizon_radius(int n, double m);

// Radial height profile f(rho) of a graphical hypersurface, rho = sinh(r)
// the area radius of H^n.  f vanishes on the boundary sphere rho_plus,
// increases outward, and approaches a finite asymptotic height sup_f; inside
// the boundary sphere the constant extension f = 0 is returned.
//
// The closed-form family has slope
//     df/drho = sqrt(2 m rho^{2-n} / F_m) / (1 + rho^2),
//     F_m(rho) = 1 + rho^2 - 2 m rho^{2-n},
// which diverges like (rho - rho_plus)^{-1/2} at the boundary.  All
// evaluations factor F_m = (rho - rho_plus) S(rho) with the smooth cofactor
// S, so nothing is lost to cancellation at the horizon; the *_at_offset and
// u-parametrized entry points keep that exactness available to callers.
class RadialProfile {
 public:
  RadialProfile() = default;

  int n() const;
  ProfileKind kind() const;
  double rho_plus() const;        // boundary area radius (0 = entire graph)
  bool entire() const;            // no boundary sphere
  double mass_parameter() const;  // model mass; NaN for tabulated profiles

  double f(double rho) const;
  double df(double rho) const;   // requires rho > rho_plus (or entire)
  double d2f(double rho) const;  // analytic for the model, cellwise for tables
  double sup_f() const;

  // Evaluations at rho = rho_plus + delta with delta supplied exactly
  // (callers that know the offset avoid the rho - rho_plus subtraction).
  double f_at_offset(double delta) const;
  double df_at_offset(double delta) const;

  // u^2 df(rho_plus + u^2)^2 — finite and smooth in u across the boundary.
  // Arc-length and volume elements built from it stay integrable without
  // any endpoint special-casing once substituted rho = rho_plus + u^2.
  double u2_df2(double u) const;

  static RadialProfile ads_schwarzschild(int n, double m);
  // Monotone cubic (Fritsch-Carlson) interpolation of sampled (rho, f)
  // pairs; a third column supplies slopes directly when present.
  static RadialProfile from_table(int n, std::vector<double> rho,
                                  std::vector<double> f,
                                  std::vector<double> df = {});
  static RadialProfile load_table(int n, const std::string& path);

 private:
  struct Backend;
  explicit RadialProfile(std::shared_ptr<const Backend> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Backend> impl_;
};

}  // namespace ahgm
