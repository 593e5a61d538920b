#pragma once

// The p-adic log-gamma analogue G_{p,E} on |x|_p > 1, with log the
// Iwasawa logarithm.

#include "padic_ell/padic.hpp"

namespace padic_ell {

/// G(x) = (x - 1/2) log x - x - sum_{n>=1} E_{n+1} / (n (n+1) x^n).
/// Throws std::domain_error unless v_p(x) <= -1.
PadicElement G(const PadicElement& x, int guard = 2);

/// Level-M partial sum sum_{a<p^M} (-1)^a ((x+a) log(x+a) - (x+a)).
PadicElement G_limit_oracle(const PadicElement& x, int level, int guard = 2);

/// D^m G(x) = (-1)^m (m-2)! sum_k C(1-m, k) x^{1-m-k} E_k for m >= 2.
PadicElement G_deriv(int m, const PadicElement& x, int guard = 2);

/// Level-M partial sum (-1)^m (m-2)! sum_{a<p^M} (-1)^a (x+a)^{1-m}.
PadicElement G_deriv_limit_oracle(int m, const PadicElement& x, int level);

}  // namespace padic_ell
