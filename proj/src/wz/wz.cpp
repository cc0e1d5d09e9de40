#include "wzlab/wz.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "wzlab/errors.hpp"
#include "wzlab/sequences.hpp"

namespace wzlab {
namespace {

const Rat kHalf(Int(1), Int(2));

Rat factorial_cubed(unsigned n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(Int(f * f * f));
}

// H(n, k) for n = 0..n_max at fixed k, from the Pochhammer products.
std::vector<Rat> builtin_kernel_column(unsigned k, unsigned n_max) {
  std::vector<Rat> out(n_max + 1);
  Rat a = -kHalf - Rat(static_cast<long>(k));  // running factor of (-1/2-k)_n
  Rat b = -kHalf;                              // running factor of (-1/2)_n
  Rat value = 1;
  for (unsigned n = 0; n <= n_max; ++n) {
    out[n] = value;
    value *= a * a * b * Rat(4) / Rat(Int(Int(n + 1) * (n + 1) * (n + 1)));
    a += 1;
    b += 1;
  }
  return out;
}

// H on the grid 0..n_max x 0..k_max, indexed [k][n].
std::vector<std::vector<Rat>> kernel_grid(const Certificate& cert, unsigned n_max, unsigned k_max) {
  std::vector<std::vector<Rat>> grid(k_max + 1);
  if (cert.kernel == KernelKind::Builtin) {
    for (unsigned k = 0; k <= k_max; ++k) grid[k] = builtin_kernel_column(k, n_max);
    return grid;
  }
  Rat column_start = 1;
  for (unsigned k = 0; k <= k_max; ++k) {
    if (k > 0) column_start *= cert.shift_ratio_k.eval(0, Rat(static_cast<long>(k - 1)));
    auto& col = grid[k];
    col.resize(n_max + 1);
    col[0] = column_start;
    for (unsigned n = 1; n <= n_max; ++n) {
      col[n] = col[n - 1] * cert.shift_ratio_n.eval(Rat(static_cast<long>(n - 1)), Rat(static_cast<long>(k)));
    }
  }
  return grid;
}

std::string describe_mismatch(const char* what, unsigned n, unsigned k, const Rat& expected, const Rat& got) {
  std::ostringstream os;
  os << what << " at (n, k) = (" << n << ", " << k << "): kernel gives " << expected << ", certificate gives " << got;
  return os.str();
}

void validate_shift_ratios(const Certificate& cert) {
  // Both ways round from H(n,k) to H(n+1,k+1) must agree.
  RatFun2 via_n = cert.shift_ratio_n * cert.shift_ratio_k.shift(1, 0);
  RatFun2 via_k = cert.shift_ratio_k * cert.shift_ratio_n.shift(0, 1);
  Poly2 diff = RatFun2::cross_difference(via_n, via_k);
  if (!diff.is_zero()) {
    throw ShiftRatioMismatch("shift ratios are not compatible: R_n(n,k) R_k(n+1,k) - R_k(n,k) R_n(n,k+1) has numerator " +
                             diff.str());
  }
  if (cert.kernel != KernelKind::Builtin) return;
  constexpr unsigned kGrid = 10;
  for (unsigned k = 0; k < kGrid; ++k) {
    auto col = builtin_kernel_column(k, kGrid);
    auto next = builtin_kernel_column(k + 1, kGrid);
    for (unsigned n = 0; n < kGrid; ++n) {
      Rat nn(static_cast<long>(n)), kk(static_cast<long>(k));
      Rat expected_n = col[n + 1] / col[n];
      Rat expected_k = next[n] / col[n];
      Rat got_n, got_k;
      try {
        got_n = cert.shift_ratio_n.eval(nn, kk);
        got_k = cert.shift_ratio_k.eval(nn, kk);
      } catch (const std::domain_error& e) {
        throw ShiftRatioMismatch(std::string("shift ratio undefined on the kernel grid: ") + e.what());
      }
      if (got_n != expected_n) throw ShiftRatioMismatch(describe_mismatch("H(n+1,k)/H(n,k)", n, k, expected_n, got_n));
      if (got_k != expected_k) throw ShiftRatioMismatch(describe_mismatch("H(n,k+1)/H(n,k)", n, k, expected_k, got_k));
    }
  }
}

// ---- certificate text format ----

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Rat kernel(unsigned n, unsigned k) {
  Rat a = pochhammer(-kHalf - Rat(static_cast<long>(k)), n);
  return a * a * pochhammer(-kHalf, n) * pow(Rat(4), n) / factorial_cubed(n);
}

Rat eval_F(unsigned n, unsigned k) {
  long nn = n, kk = k;
  return Rat(6 * nn * nn - 5 * nn + 1 - 4 * nn * kk + 2 * kk) * kernel(n, k);
}

Rat eval_G(unsigned n, unsigned k) {
  long nn = n;
  long d = 3 + 2 * static_cast<long>(k) - 2 * nn;  // odd, hence nonzero
  return Rat(Int(4 * (1 - 2 * nn)) * nn * nn * nn, Int(d * d)) * kernel(n, k);
}

Certificate builtin_certificate() {
  const Poly2 n = Poly2::n();
  const Poly2 k = Poly2::k();
  const Poly2 half(kHalf);
  Certificate c;
  c.kernel = KernelKind::Builtin;
  Poly2 a = n - k - half;
  c.shift_ratio_n = RatFun2(Poly2(4) * a * a * (n - half), (n + Poly2(1)).pow(3));
  c.shift_ratio_k = RatFun2((k + Poly2(Rat(3)) * half).pow(2), (k + Poly2(Rat(3)) * half - n).pow(2));
  c.P = RatFun2(Poly2(6) * n * n - Poly2(5) * n + Poly2(1) - Poly2(4) * n * k + Poly2(2) * k);
  c.Q = RatFun2(Poly2(4) * (Poly2(1) - Poly2(2) * n) * n.pow(3), (Poly2(3) + Poly2(2) * k - Poly2(2) * n).pow(2));
  return c;
}

Certificate parse_certificate(std::istream& in) {
  std::map<std::string, Poly2> fields;
  std::optional<KernelKind> kind;
  static const std::vector<std::string> kKeys = {"P.num", "P.den", "Q.num", "Q.den", "shift_n.num", "shift_n.den", "shift_k.num", "shift_k.den"};
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "kernel") {
      if (value == "builtin") {
        kind = KernelKind::Builtin;
      } else if (value == "ratios") {
        kind = KernelKind::RatiosOnly;
      } else {
        throw ParseError("line " + std::to_string(lineno) + ": unknown kernel '" + value + "'");
      }
      continue;
    }
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (fields.count(key)) throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    try {
      fields.emplace(key, Poly2::parse(value));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!kind) throw ParseError("missing 'kernel' entry");
  auto take = [&](const std::string& name) -> RatFun2 {
    auto num = fields.find(name + ".num");
    if (num == fields.end()) throw ParseError("missing '" + name + ".num' entry");
    auto den = fields.find(name + ".den");
    Poly2 d = den == fields.end() ? Poly2(1) : den->second;
    if (d.is_zero()) throw ParseError("'" + name + ".den' is the zero polynomial");
    return RatFun2(num->second, d);
  };
  Certificate c;
  c.kernel = *kind;
  c.P = take("P");
  c.Q = take("Q");
  c.shift_ratio_n = take("shift_n");
  c.shift_ratio_k = take("shift_k");
  return c;
}

Certificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open certificate file '" + path + "'");
  return parse_certificate(in);
}

std::string format_certificate(const Certificate& cert) {
  std::ostringstream os;
  os << "kernel = " << (cert.kernel == KernelKind::Builtin ? "builtin" : "ratios") << '\n';
  auto emit = [&](const char* name, const RatFun2& f) {
    os << name << ".num = " << f.num().str() << '\n';
    os << name << ".den = " << f.den().str() << '\n';
  };
  emit("P", cert.P);
  emit("Q", cert.Q);
  emit("shift_n", cert.shift_ratio_n);
  emit("shift_k", cert.shift_ratio_k);
  return os.str();
}

NumericResult verify_pair_numeric(unsigned n_max, unsigned k_max, unsigned workers) {
  return verify_pair_numeric(builtin_certificate(), n_max, k_max, workers);
}

NumericResult verify_pair_numeric(const Certificate& cert, unsigned n_max, unsigned k_max, unsigned workers) {
  const auto grid = kernel_grid(cert, n_max + 1, k_max + 1);
  auto value = [&](const RatFun2& f, unsigned n, unsigned k) {
    return f.eval(Rat(static_cast<long>(n)), Rat(static_cast<long>(k))) * grid[k][n];
  };

  // Columns k are dealt to workers round-robin; each reports its first
  // failing n, and the smallest (n, k) overall wins.
  std::mutex mutex;
  std::optional<GridWitness> best;
  auto better = [](const GridWitness& a, const GridWitness& b) { return std::pair(a.n, a.k) < std::pair(b.n, b.k); };
  auto run = [&](unsigned first_k, unsigned stride) {
    std::optional<GridWitness> local;
    for (unsigned k = first_k; k <= k_max; k += stride) {
      for (unsigned n = 0; n <= n_max; ++n) {
        if (local && !better(GridWitness{n, k, {}}, *local)) break;
        std::ostringstream detail;
        try {
          Rat lhs = value(cert.P, n, k + 1) - value(cert.P, n, k);
          Rat rhs = value(cert.Q, n + 1, k) - value(cert.Q, n, k);
          if (lhs == rhs) continue;
          detail << "F(n,k+1)-F(n,k) = " << lhs << " but G(n+1,k)-G(n,k) = " << rhs;
        } catch (const std::domain_error& e) {
          detail << "pair undefined: " << e.what();
        }
        local = GridWitness{n, k, detail.str()};
        break;
      }
    }
    if (local) {
      std::lock_guard lock(mutex);
      if (!best || better(*local, *best)) best = local;
    }
  };
  workers = std::max(1u, std::min(workers, k_max + 1));
  if (workers == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
    for (auto& t : pool) t.join();
  }
  NumericResult r;
  r.holds = !best.has_value();
  r.witness = best;
  return r;
}

SymbolicResult verify_pair_symbolic(const Certificate& cert) {
  validate_shift_ratios(cert);
  RatFun2 lhs = cert.P.shift(0, 1) * cert.shift_ratio_k - cert.P;
  RatFun2 rhs = cert.Q.shift(1, 0) * cert.shift_ratio_n - cert.Q;
  SymbolicResult r;
  r.residual = RatFun2::cross_difference(lhs, rhs);
  r.holds = r.residual.is_zero();
  return r;
}

std::vector<Mutant> coefficient_mutants(const Certificate& cert) {
  std::vector<Mutant> out;
  auto mutate = [&](const char* label, const Poly2& poly, auto rebuild) {
    for (const auto& [ex, c] : poly.terms()) {
      Poly2 changed = poly;
      changed.set_coefficient(ex.first, ex.second, c + Rat(1));
      Certificate m = cert;
      rebuild(m, changed);
      std::ostringstream os;
      os << label << " n^" << ex.first << " k^" << ex.second << ": " << c << " -> " << (c + Rat(1));
      out.push_back({os.str(), std::move(m)});
    }
  };
  mutate("P.num", cert.P.num(), [](Certificate& m, const Poly2& p) { m.P = RatFun2(p, m.P.den()); });
  mutate("Q.num", cert.Q.num(), [](Certificate& m, const Poly2& p) { m.Q = RatFun2(p, m.Q.den()); });
  mutate("Q.den", cert.Q.den(), [](Certificate& m, const Poly2& p) { m.Q = RatFun2(m.Q.num(), p); });
  return out;
}

HalfRangeDecomposition telescoping_decomposition_1(u64 p) {
  if (p <= 3 || p % 2 == 0) throw std::invalid_argument("telescoping_decomposition_1 needs an odd prime p > 3");
  const unsigned half_up = static_cast<unsigned>((p + 1) / 2);
  const unsigned half_down = static_cast<unsigned>((p - 1) / 2);
  HalfRangeDecomposition d;
  d.boundary_F = eval_F(half_up, 0);
  for (unsigned k = 0; k + 1 <= half_down; ++k) d.g_sum += eval_G(half_up, k);
  for (unsigned n = 0; n <= half_down; ++n) d.f_sum += eval_F(n, half_down);
  return d;
}

FullRangeDecomposition telescoping_decomposition_2(u64 p) {
  if (p <= 3 || p % 2 == 0) throw std::invalid_argument("telescoping_decomposition_2 needs an odd prime p > 3");
  const unsigned pp = static_cast<unsigned>(p);
  const unsigned half_down = static_cast<unsigned>((p - 1) / 2);
  FullRangeDecomposition d;
  for (unsigned k = 0; k + 1 <= half_down; ++k) d.g_sum += eval_G(pp, k);
  for (unsigned n = 0; n < pp; ++n) d.f_sum += eval_F(n, half_down);
  return d;
}

}  // namespace wzlab
