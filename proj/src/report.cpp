#include "qsocle/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsocle {

using nlohmann::json;

CaseReport analyze(const SemigroupPtr& H, int64_t s, int64_t q) {
  const auto t0 = std::chrono::steady_clock::now();

  SocleCase c = quasi_socle(H, s, q);
  CaseReport r;
  r.generators = H->generators();
  r.symmetric = H->is_symmetric();
  r.multiplicity = H->multiplicity();
  r.s = s;
  r.q = q;
  r.exploratory = q != 2;
  r.v_AQ = c.v_AQ;
  r.I_min_gens = c.I.min_generators();
  r.integral_over_Q = is_integral_over_Q(c);

  const Theorem11Result t11 = check_theorem_1_1(c);
  r.m2I_eq_m2Q = t11.m2I_eq_m2Q;
  r.I3_eq_QI2 = t11.I3_eq_QI2;

  if (r.symmetric && c.v_AQ > 1 && q == 2)
    r.prop_2_4_consistent = check_prop_2_4(c).consistent;

  if (r.integral_over_Q) {
    PowersCache cache(c);
    r.reduction_number = cache.reduction_num();
    const CohomologyTable h0G = h0_table_G(cache);
    const CohomologyTable h0F = h0_table_F(cache);
    r.G_CM = is_G_cohen_macaulay(cache);
    r.F_CM = is_F_cohen_macaulay(cache);
    if (*r.G_CM != h0G.empty())
      throw Error("Valabrega-Valla verdict disagrees with H^0_M(G) emptiness");
    if (*r.F_CM != h0F.empty())
      throw Error("fiber-cone regularity verdict disagrees with H^0_M(F) emptiness");
    r.h0G_length = h0G.total_length;
    r.h0F_length = h0F.total_length;
    r.G_Buchsbaum = is_G_buchsbaum(cache);
    r.F_Buchsbaum = is_F_buchsbaum(cache);
    r.ratliff_rush_gens = ratliff_rush(cache).min_generators();
  }

  r.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

CaseReport analyze(const std::vector<int64_t>& gens, int64_t s, int64_t q) {
  return analyze(NumericalSemigroup::from_generators(gens), s, q);
}

std::vector<CaseReport> sweep(const std::vector<int64_t>& gens, int64_t s_max,
                              int64_t q, int jobs) {
  SemigroupPtr H = NumericalSemigroup::from_generators(gens);
  if (H->is_full()) throw RegularRingRefused();
  if (s_max < H->multiplicity())
    throw Error("s_max is below the multiplicity; no cases to run");

  std::vector<int64_t> params;
  for (int64_t s = 1; s <= s_max; ++s) {
    if (H->contains(s)) params.push_back(s);
  }

  std::vector<CaseReport> out(params.size());
  std::exception_ptr eptr;
  if (jobs > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(params.size()); ++i) {
      try {
        out[static_cast<size_t>(i)] = analyze(H, params[static_cast<size_t>(i)], q);
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
        eptr = std::current_exception();
      }
    }
  } else {
    for (size_t i = 0; i < params.size(); ++i) out[i] = analyze(H, params[i], q);
  }
  if (eptr) std::rethrow_exception(eptr);
  return out;
}

Example43Record run_example43(int64_t n) {
  if (n < 3) throw Error("example family needs n >= 3");
  std::vector<int64_t> gens = {2 * n - 1};
  for (int64_t i = 2; i <= n; ++i) gens.push_back((2 * n + 1) * i - 2 * n - 2);
  SemigroupPtr H = NumericalSemigroup::from_generators(gens);

  Example43Record rec;
  rec.n = n;
  rec.generators = H->generators();
  rec.s = 2 * gens[0];
  SocleCase c = quasi_socle(H, rec.s, 2);
  rec.integral_over_Q = is_integral_over_Q(c);
  rec.reduction_number = reduction_number(c);
  rec.r_eq_2n_minus_2 = rec.reduction_number == 2 * n - 2;

  // I = t^{a_1} m + (t^{a_2 + a_n})
  const int64_t a1 = gens[0];
  std::vector<int64_t> struct_gens;
  for (int64_t a : H->generators()) struct_gens.push_back(a1 + a);
  struct_gens.push_back(gens[1] + gens.back());
  rec.I_structure_holds = c.I == HIdeal::from_exponents(H, struct_gens);

  // E(I^i) = i a_1 + E(m^i) for i = 2, 3
  rec.power_structure_holds = true;
  for (int64_t i = 2; i <= 3; ++i) {
    const HIdeal mi = power(c.m, i);
    std::vector<int64_t> shifted = mi.min_generators();
    for (int64_t& g : shifted) g += i * a1;
    if (power(c.I, i) != HIdeal::from_exponents(H, shifted))
      rec.power_structure_holds = false;
  }
  return rec;
}

namespace {

json to_json(const CaseReport& r) {
  json j;
  j["generators"] = r.generators;
  j["symmetric"] = r.symmetric;
  j["multiplicity"] = r.multiplicity;
  j["s"] = r.s;
  j["q"] = r.q;
  j["exploratory"] = r.exploratory;
  j["v_AQ"] = r.v_AQ;
  j["I"] = {{"gens", r.I_min_gens}};
  j["integral_over_Q"] = r.integral_over_Q;
  j["reduction_number"] =
      r.reduction_number ? json(*r.reduction_number) : json("not a reduction");
  j["m2I_eq_m2Q"] = r.m2I_eq_m2Q;
  j["I3_eq_QI2"] = r.I3_eq_QI2;
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  j["G_CM"] = opt(r.G_CM);
  j["F_CM"] = opt(r.F_CM);
  j["G_Buchsbaum"] = opt(r.G_Buchsbaum);
  j["F_Buchsbaum"] = opt(r.F_Buchsbaum);
  j["h0G_length"] = opt(r.h0G_length);
  j["h0F_length"] = opt(r.h0F_length);
  j["ratliff_rush"] =
      r.ratliff_rush_gens ? json({{"gens", *r.ratliff_rush_gens}}) : json(nullptr);
  j["prop_2_4_consistent"] = opt(r.prop_2_4_consistent);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

std::string report_to_json(const CaseReport& r) {
  json j = to_json(r);
  j["schema_version"] = 1;
  return j.dump(2);
}

std::string reports_to_json(const std::vector<CaseReport>& rs) {
  json j;
  j["schema_version"] = 1;
  j["cases"] = json::array();
  for (const auto& r : rs) j["cases"].push_back(to_json(r));
  return j.dump(2);
}

std::string example43_to_json(const std::vector<Example43Record>& rs) {
  json j;
  j["schema_version"] = 1;
  j["family"] = json::array();
  for (const auto& r : rs) {
    j["family"].push_back({{"n", r.n},
                           {"generators", r.generators},
                           {"s", r.s},
                           {"integral_over_Q", r.integral_over_Q},
                           {"reduction_number", r.reduction_number},
                           {"r_eq_2n_minus_2", r.r_eq_2n_minus_2},
                           {"I_structure_holds", r.I_structure_holds},
                           {"power_structure_holds", r.power_structure_holds}});
  }
  return j.dump(2);
}

std::string reports_to_table(const std::vector<CaseReport>& rs) {
  std::ostringstream os;
  auto flag = [](const std::optional<bool>& b) {
    return !b ? "-" : (*b ? "yes" : "no");
  };
  os << "    s    r  G_CM  F_CM  F_Bb  G_Bb  m2I!=m2Q  I\n";
  for (const auto& r : rs) {
    std::string rn = r.reduction_number ? std::to_string(*r.reduction_number) : "-";
    os.width(5);
    os << r.s;
    os.width(5);
    os << rn;
    os.width(6);
    os << flag(r.G_CM);
    os.width(6);
    os << flag(r.F_CM);
    os.width(6);
    os << flag(r.F_Buchsbaum);
    os.width(6);
    os << flag(r.G_Buchsbaum);
    os.width(10);
    os << (r.m2I_eq_m2Q ? "no" : "yes");
    os << "  (";
    for (size_t i = 0; i < r.I_min_gens.size(); ++i) {
      if (i) os << ",";
      os << "t^" << r.I_min_gens[i];
    }
    os << ")\n";
  }
  return os.str();
}

}  // namespace qsocle
