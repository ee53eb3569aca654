#include "landau/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <memory>
#include <string>

#include "landau/errors.hpp"

namespace landau {

namespace {

constexpr std::size_t kWorkspaceIntervals = 2000;

double trampoline(double x, void* params) {
  return (*static_cast<const std::function<double(double)>*>(params))(x);
}

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol) {
  std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> ws(
      gsl_integration_workspace_alloc(kWorkspaceIntervals));
  gsl_function fn{&trampoline, const_cast<std::function<double(double)>*>(&f)};
  QuadratureResult r;
  // GSL's default handler aborts; errors are reported through the status instead.
  const auto old_handler = gsl_set_error_handler_off();
  const int status = gsl_integration_qag(&fn, a, b, abs_tol, 0.0, kWorkspaceIntervals,
                                         GSL_INTEG_GAUSS61, ws.get(), &r.value, &r.abs_error);
  gsl_set_error_handler(old_handler);
  if (status != GSL_SUCCESS) {
    throw DomainError(std::string("adaptive quadrature failed: ") + gsl_strerror(status));
  }
  return r;
}

}  // namespace landau
