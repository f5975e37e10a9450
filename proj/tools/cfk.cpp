#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <optional>
#include <string>
#include <vector>

#include "cfk/bifurcation.hpp"
#include "cfk/cascades.hpp"
#include "cfk/errors.hpp"
#include "cfk/lamination.hpp"
#include "cfk/matching.hpp"
#include "cfk/minkowski.hpp"
#include "cfk/spectra.hpp"
#include "cfk/univoque.hpp"

using namespace cfk;
using Json = nlohmann::ordered_json;

namespace {

struct Output {
  std::vector<Json> rows;
  bool single = false;
  // Plain text; falls back to key=value lines when unset.
  std::function<void(std::ostream&, const std::vector<Json>&)> plain;
};

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void emit(const Output& out, const std::string& format) {
  if (format == "json") {
    if (out.single && out.rows.size() == 1)
      std::cout << out.rows.front().dump(2) << "\n";
    else
      std::cout << Json(out.rows).dump(2) << "\n";
  } else if (format == "csv") {
    if (out.rows.empty()) return;
    bool first = true;
    for (const auto& [k, v] : out.rows.front().items()) {
      std::cout << (first ? "" : ",") << csv_escape(k);
      first = false;
    }
    std::cout << "\n";
    for (const Json& row : out.rows) {
      first = true;
      for (const auto& [k, v] : row.items()) {
        std::cout << (first ? "" : ",") << csv_escape(cell(v));
        first = false;
      }
      std::cout << "\n";
    }
  } else if (out.plain) {
    out.plain(std::cout, out.rows);
  } else {
    for (const Json& row : out.rows) {
      bool first = true;
      for (const auto& [k, v] : row.items()) {
        std::cout << (first ? "" : " ") << k << "=" << cell(v);
        first = false;
      }
      std::cout << "\n";
    }
  }
}

BigRational width_for(int digits) { return pow10_inverse(digits); }

// Binary values print as fractions, CF values as expansions.
std::string exact(const Expansion& e) {
  if (const auto* b = std::get_if<BinaryExpansion>(&e)) return to_fraction_string(b->to_rational());
  return to_string(e);
}

Json gap_record(const IntervalGap& g, int digits) {
  return Json{{"kind", to_string(g.kind)},
              {"depth", g.depth},
              {"pseudocenter", to_fraction_string(g.pseudocenter)},
              {"left", to_string(g.left)},
              {"right", to_string(g.right)},
              {"left_value_decimal", to_decimal(g.left, digits)},
              {"right_value_decimal", to_decimal(g.right, digits)}};
}

// Upper enclosure endpoints round up so the printed interval still encloses.
std::string decimal_up(const BigRational& x, int digits) {
  BigRational scale = 1 / pow10_inverse(digits);
  BigRational up = BigRational(ceil_of(x * scale)) / scale;
  return cfk::to_decimal(up, digits);
}

Json enclosure_fields(const Enclosure& e, const std::string& name, int digits) {
  return Json{{name + "_low", to_decimal(e.lo, digits)}, {name + "_high", decimal_up(e.hi, digits)}};
}

std::string interval_string(const Enclosure& e, int digits) {
  return "[" + cfk::to_decimal(e.lo, digits) + ", " + decimal_up(e.hi, digits) + "]";
}

// Accepts CF syntax, binary syntax or a rational.
std::variant<CfExpansion, BinaryExpansion, BigRational> parse_number(const std::string& text) {
  if (!text.empty() && text.front() == '[') return CfExpansion::parse(text);
  if (text.rfind("0.", 0) == 0 && text.find('(') != std::string::npos) return BinaryExpansion::parse(text);
  return parse_rational(text);
}

CfExpansion as_cf(const std::string& text) {
  auto v = parse_number(text);
  if (auto* c = std::get_if<CfExpansion>(&v)) return *c;
  if (auto* r = std::get_if<BigRational>(&v)) return CfExpansion::from_rational(*r);
  throw ParseError("expected a continued fraction or a rational: " + text);
}

BinaryExpansion as_binary(const std::string& text) {
  if (text.rfind("0.", 0) == 0 && text.find_first_not_of("01.()") == std::string::npos)
    return BinaryExpansion::parse(text);
  auto v = parse_number(text);
  if (auto* b = std::get_if<BinaryExpansion>(&v)) return *b;
  if (auto* r = std::get_if<BigRational>(&v)) return BinaryExpansion::from_rational(*r);
  throw ParseError("expected a binary expansion or a rational: " + text);
}

std::string binary_value(const BinaryExpansion& b) { return to_fraction_string(b.to_rational()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on the continued-fraction and kneading bifurcation sets"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "plain";
  int digits = 30;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  app.add_option("--precision", digits, "Decimal digits")->check(CLI::Range(1, 2000))->capture_default_str();

  Output out;

  // classify
  auto* classify = app.add_subcommand("classify", "Membership in E, Lambda and Gamma");
  std::string cx;
  classify->add_option("--x", cx, "CF [0;...], binary 0.b(p) or rational")->required();
  classify->callback([&] {
    auto v = parse_number(cx);
    Json row;
    if (auto* r = std::get_if<BigRational>(&v)) {
      if (*r < 0 || *r > 1) throw DomainError("value outside [0,1]: " + cx);
      row["value"] = to_fraction_string(*r);
      auto c = CfExpansion::from_rational(*r);
      auto b = BinaryExpansion::from_rational(*r);
      row["cf"] = c.to_string();
      row["binary"] = b.to_string();
      row["in_E"] = e_member(c);
      row["in_Lambda"] = lambda_member(b);
      row["in_Gamma"] = gamma_member(b);
    } else if (auto* c = std::get_if<CfExpansion>(&v)) {
      row["cf"] = c->to_string();
      row["value"] = to_string(cf_value(*c));
      row["decimal"] = cfk::to_decimal(cf_value(*c), digits);
      bool member = e_member(*c);
      row["in_E"] = member;
      row["criteria_agree"] = member == e_member(*c, ECriterion::farey) &&
                              member == e_member(*c, ECriterion::farey_psi);
      if (member && c->is_purely_periodic()) row["point"] = to_string(classify_e_point(*c));
      row["phi"] = phi(*c).to_string();
    } else {
      const auto& b = std::get<BinaryExpansion>(v);
      row["binary"] = b.to_string();
      row["value"] = binary_value(b);
      row["in_Lambda"] = lambda_member(b);
      row["in_Gamma"] = gamma_member(b);
      if (compare(b, BigRational(1, 2)) >= 0) row["phi_inv"] = phi_inv(b).to_string();
    }
    out.rows = {row};
    out.single = true;
  });

  // phi
  auto* phicmd = app.add_subcommand("phi", "phi = ? o psi1, or its inverse");
  std::string px;
  bool inverse = false;
  phicmd->add_option("--x", px, "Input value")->required();
  phicmd->add_flag("--inverse", inverse, "Apply phi^-1 to a binary value in [1/2,1]");
  phicmd->callback([&] {
    Json row;
    if (inverse) {
      auto b = as_binary(px);
      auto c = phi_inv(b);
      row = Json{{"x", b.to_string()},
                 {"phi_inv", c.is_rational() ? to_string(cf_value(c)) : c.to_string()},
                 {"cf", c.to_string()},
                 {"decimal", cfk::to_decimal(cf_value(c), digits)}};
    } else {
      auto c = as_cf(px);
      auto b = phi(c);
      row = Json{{"x", c.to_string()},
                 {"phi", binary_value(b)},
                 {"binary", b.to_string()},
                 {"decimal", cfk::to_decimal(b.to_rational(), digits)}};
    }
    out.rows = {row};
    out.single = true;
    out.plain = [inverse](std::ostream& os, const std::vector<Json>& rows) {
      os << cell(rows.front()[inverse ? "phi_inv" : "phi"]) << "\n";
    };
  });

  // interval
  auto* interval = app.add_subcommand("interval", "Quadratic interval I_r or dyadic interval J_d");
  std::string ir, id;
  interval->add_option("--r", ir, "Rational r in (0,1]");
  interval->add_option("--d", id, "Dyadic d in (0,1)");
  interval->callback([&] {
    if (ir.empty() == id.empty()) throw ParseError("give exactly one of --r and --d");
    Json row;
    if (!ir.empty()) {
      BigRational r = parse_rational(ir);
      row = gap_record(quadratic_interval(r), digits);
      row["maximal"] = is_maximal(r);
    } else {
      row = gap_record(dyadic_interval(parse_rational(id)), digits);
    }
    out.rows = {row};
    out.single = true;
  });

  // bisect
  auto* bisect = app.add_subcommand("bisect", "Gap components from the bisection algorithm");
  std::string space = "lambda";
  int depth = 1;
  bisect->add_option("--space", space)->check(CLI::IsMember({"lambda", "e"}))->capture_default_str();
  bisect->add_option("--depth", depth)->check(CLI::Range(1, 24))->required();
  bisect->callback([&] {
    auto gaps = bisect_enumerate(space == "lambda" ? Space::lambda : Space::e, depth);
    for (const auto& g : gaps) out.rows.push_back(gap_record(g, digits));
    out.plain = [gaps](std::ostream& os, const std::vector<Json>&) {
      for (const auto& g : gaps)
        os << "(" << exact(g.left) << ", " << exact(g.right) << ")\tpseudocenter=" << to_fraction_string(g.pseudocenter)
           << "\tdepth=" << g.depth << "\n";
    };
  });

  // matching
  auto* matching = app.add_subcommand("matching", "Verify T_alpha^(N+1)(alpha) = T_alpha^(M+1)(alpha-1)");
  std::string mr;
  std::vector<std::string> malpha;
  std::uint64_t max_steps = 200;
  matching->add_option("--r", mr, "Pseudocenter r in (0,1)")->required();
  matching->add_option("--alpha", malpha, "Rational alpha in I_r (default: three sample points)");
  matching->add_option("--max-steps", max_steps)->capture_default_str();
  matching->callback([&] {
    BigRational r = parse_rational(mr);
    std::vector<BigRational> alphas;
    for (const auto& a : malpha) alphas.push_back(parse_rational(a));
    if (alphas.empty()) alphas = matching_sample_points(r);
    for (const auto& a : alphas) {
      auto m = verify_matching(r, QuadraticSurd(a), max_steps);
      Json row{{"r", to_fraction_string(r)},
               {"alpha", to_fraction_string(a)},
               {"N", m.exponents.N},
               {"M", m.exponents.M},
               {"holds", m.holds},
               {"orbit_lengths", Json::array({m.steps.first, m.steps.second})}};
      row["first_match"] = m.first_match ? Json::array({m.first_match->first, m.first_match->second}) : Json();
      out.rows.push_back(row);
    }
  });

  // cascade
  auto* cascade = app.add_subcommand("cascade", "Period-doubling window (--eta) or CF cascade (--r)");
  std::string ceta, cr;
  unsigned cj = 4;
  cascade->add_option("--eta", ceta, "Binary word; use e for the empty word");
  cascade->add_option("--r", cr, "Pseudocenter of a maximal quadratic interval");
  cascade->add_option("--j", cj, "Last index")->capture_default_str();
  cascade->callback([&] {
    const bool has_eta = cascade->count("--eta") > 0;
    if (has_eta == !cr.empty()) throw ParseError("give exactly one of --eta and --r");
    if (has_eta) {
      Word eta = parse_word(ceta);
      auto w = periodic_window(eta, cj, width_for(digits));
      for (unsigned j = 0; j <= cj; ++j)
        out.rows.push_back(Json{{"j", std::to_string(j)},
                                {"tau", to_fraction_string(w.tau[j])},
                                {"d", to_fraction_string(w.d[j])},
                                {"tau_decimal", cfk::to_decimal(w.tau[j], digits)},
                                {"d_decimal", cfk::to_decimal(w.d[j], digits)}});
      out.rows.push_back(Json{{"j", "inf"},
                              {"tau", ""},
                              {"d", ""},
                              {"tau_decimal", interval_string(w.tau_infinity, digits)},
                              {"d_decimal", ""}});
    } else {
      auto c = cf_cascade(parse_rational(cr), cj, width_for(digits));
      for (unsigned n = 0; n < c.alpha.size(); ++n) {
        std::string sigma;
        for (Bit s : c.sigma[n]) sigma += s ? "S1" : "S0";
        out.rows.push_back(Json{{"n", std::to_string(n)},
                                {"sigma", sigma},
                                {"alpha", c.alpha_cf[n].to_string()},
                                {"alpha_decimal", c.alpha[n].to_decimal(digits)}});
      }
      out.rows.push_back(Json{{"n", "inf"},
                              {"sigma", ""},
                              {"alpha", ""},
                              {"alpha_decimal", interval_string(c.alpha_infinity, digits)}});
    }
  });

  // xi
  auto* xi = app.add_subcommand("xi", "Enclosure of prod (1 - z^(2^k))");
  std::string xz;
  xi->add_option("--z", xz, "Rational z in [0,1)")->required();
  xi->callback([&] {
    auto e = xi_eval(parse_rational(xz), width_for(digits));
    Json row{{"z", to_fraction_string(parse_rational(xz))}};
    row.update(enclosure_fields(e, "xi", digits));
    out.rows = {row};
    out.single = true;
  });

  // dimension
  auto* dimension = app.add_subcommand("dimension", "Multinacci roots and dim C_K");
  unsigned dk = 2, dk_max = 0;
  dimension->add_option("--k", dk, "K >= 2")->required();
  dimension->add_option("--k-max", dk_max, "Emit rows K..k-max");
  dimension->callback([&] {
    unsigned last = std::max(dk, dk_max);
    for (unsigned K = dk; K <= last; ++K) {
      auto r = dimension_report(K, width_for(digits));
      std::ostringstream ref;
      ref.precision(12);
      ref << r.e_reference;
      out.rows.push_back(Json{{"K", std::to_string(K)},
                              {"lambda_K", to_decimal(r.lambda_K.lo, digits)},
                              {"dim_CK", to_decimal(r.dim.lo, digits)},
                              {"sandwich_low", to_decimal(r.sandwich_low.lo, digits)},
                              {"sandwich_high", decimal_up(r.sandwich_high.hi, digits)},
                              {"e_reference", ref.str()}});
    }
  });

  // univoque
  auto* univoque = app.add_subcommand("univoque", "Root q of sum c_k q^-k = 1");
  std::string useq;
  std::uint64_t udepth = 256;
  univoque->add_option("--seq", useq, "Binary expansion or thue-morse")->required();
  univoque->add_option("--prec", digits, "Decimal digits");
  univoque->add_option("--check-depth", udepth, "Admissibility depth for generated sequences")
      ->capture_default_str();
  univoque->callback([&] {
    AdmissibleSequence c = useq == "thue-morse" ? AdmissibleSequence::shifted_thue_morse()
                                                : AdmissibleSequence::from_expansion(as_binary(useq));
    auto rep = check_admissible(c, udepth);
    auto res = univoque_q(c, width_for(digits));
    Json row{{"seq", c.label},
             {"admissible", rep.admissible},
             {"complete", rep.complete},
             {"q_low", to_decimal(res.q.lo, digits)},
             {"q_high", decimal_up(res.q.hi, digits)},
             {"depth", rep.complete ? Json(res.depth) : Json(std::max(res.depth, udepth))}};
    out.rows = {row};
    out.single = true;
  });

  // rays
  auto* rays = app.add_subcommand("rays", "Real minor leaves with denominators up to N");
  unsigned rmax = 0;
  rays->add_option("--denominator-max", rmax)->check(CLI::Range(1u, 4096u))->required();
  rays->callback([&] {
    std::vector<BigRational> angles;
    for (unsigned den = 1; den <= rmax; ++den)
      for (unsigned num = 0; 2 * num <= den; ++num) {
        BigRational a = make_rational(num, den);
        if (a.get_den() == den) angles.push_back(a);
      }
    std::sort(angles.begin(), angles.end());
    for (const auto& a : angles) {
      Leaf L(a, 1 - a);
      if (!is_real_minor_leaf(L)) continue;
      auto x = BinaryExpansion::from_rational(2 * a);
      auto th = BinaryExpansion::from_rational(a);
      auto e = compare(x, BigRational(1, 2)) >= 0 ? phi_inv(x).to_string() : std::string();
      out.rows.push_back(Json{{"theta_minus", to_fraction_string(a)},
                              {"theta_plus", to_fraction_string(L.a == a ? L.b : L.a)},
                              {"period", th.period().size()},
                              {"preperiod", th.preperiod().size()},
                              {"lambda_point", to_fraction_string(2 * a)},
                              {"e_parameter", e}});
    }
  });

  try {
    app.parse(argc, argv);
    emit(out, format);
    return 0;
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const cfk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const cfk::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  }
}
