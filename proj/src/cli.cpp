#include "pkroots/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cctype>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "pkroots/errors.hpp"
#include "pkroots/factorcount.hpp"
#include "pkroots/igusa.hpp"
#include "pkroots/oracle.hpp"
#include "pkroots/rootcount.hpp"

namespace pkroots::cli {
namespace {

using json = nlohmann::json;

constexpr unsigned kMaxExponent = 100000;

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  UPoly parse() {
    UPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'X' || c == '(';
  }

  UPoly expr() {
    UPoly r = term();
    for (;;) {
      if (eat('+'))
        r = upoly::add_z(r, term());
      else if (eat('-'))
        r = upoly::add_z(r, upoly::mul_z(UPoly{-1}, term()));
      else
        return r;
    }
  }
  UPoly term() {
    UPoly r = unary();
    for (;;) {
      if (eat('*'))
        r = upoly::mul_z(r, unary());
      else if (starts_factor())
        r = upoly::mul_z(r, power());
      else
        return r;
    }
  }
  UPoly unary() {
    if (eat('-')) return upoly::mul_z(UPoly{-1}, unary());
    if (eat('+')) return unary();
    return power();
  }
  UPoly power() {
    UPoly base = primary();
    if (!eat('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    const Int e(s_.substr(start, pos_ - start));
    if (e > kMaxExponent) fail("exponent too large");
    UPoly r{1};
    for (unsigned long i = 0; i < e.get_ui(); ++i) r = upoly::mul_z(r, base);
    return r;
  }
  UPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == 'x' || c == 'X') {
      ++pos_;
      return UPoly{0, 1};
    }
    if (c == '(') {
      ++pos_;
      UPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return UPoly{Int(s_.substr(start, pos_ - start))};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

// Generator h_i as nested arrays: index j of the outer array is the
// coefficient of x_i^j, recursing down to integer scalars.
json nested(const MultiPoly& a) {
  if (a.nvars() == 0) return json(a.scalar().get_str());
  json arr = json::array();
  for (const auto& c : a.coeffs()) arr.push_back(nested(c));
  return arr;
}

std::string term_string(const MultiPoly& a) {
  if (a.nvars() == 0) return a.scalar().get_str();
  const std::string v = "x" + std::to_string(a.nvars() - 1);
  std::string out;
  const auto cs = a.coeffs();
  for (std::size_t j = cs.size(); j-- > 0;) {
    if (cs[j].is_zero()) continue;
    std::string c = term_string(cs[j]);
    const bool compound = c.find(' ') != std::string::npos;
    std::string mono = j == 0 ? "" : (j == 1 ? v : v + "^" + std::to_string(j));
    std::string piece;
    if (j == 0)
      piece = c;
    else if (c == "1")
      piece = mono;
    else
      piece = (compound ? "(" + c + ")" : c) + "*" + mono;
    out += out.empty() ? piece : " + " + piece;
  }
  return out.empty() ? "0" : out;
}

std::string ideal_string(const TriangularIdeal& I) {
  std::string s = "<";
  for (std::size_t i = 0; i < I.length(); ++i) s += (i ? ", " : "") + term_string(I[i]);
  return s + ">";
}

UPoly read_polynomial(const JobSpec& spec) {
  if (spec.poly.has_value() == spec.coeffs.has_value())
    throw ParseError("exactly one of --poly and --coeffs is required");
  return spec.poly ? parse_polynomial(*spec.poly) : parse_coefficients(*spec.coeffs);
}

struct Verification {
  bool checked = false;
  bool ok = true;
  std::string diff;
};

int finish(json& j, const JobSpec& spec, const Verification& v, std::ostream& out, std::ostream& err,
           const std::string& text) {
  if (spec.verify) j["verify"] = {{"checked", v.checked}, {"ok", v.ok}};
  if (spec.json)
    out << j.dump(2) << "\n";
  else {
    out << text;
    if (spec.verify) out << "verify: " << (v.checked ? (v.ok ? "ok" : "MISMATCH") : "skipped (above oracle cap)") << "\n";
  }
  if (!v.ok) {
    err << "verification mismatch\n" << v.diff;
    return kExitVerifyMismatch;
  }
  return kExitOk;
}

bool under_cap(const Int& n) { return n <= Int(static_cast<unsigned long>(oracle::kDefaultCap)); }

int run_roots(const UPoly& f, const Modulus& mod, const JobSpec& spec, std::ostream& out, std::ostream& err) {
  CountOptions opts;
  opts.normalize = spec.normalize;
  const CountReport rep = count_roots(f, mod, opts);

  json j;
  j["p"] = mod.p().get_str();
  j["k"] = mod.k();
  j["degree"] = rep.degree;
  j["root_count"] = rep.root_count.get_str();
  j["msis"] = json::array();
  for (const auto& m : rep.msis) {
    json gens = json::array();
    for (const auto& h : m.ideal.base().generators()) gens.push_back(nested(h));
    j["msis"].push_back({{"length", m.length}, {"degree", m.degree}, {"generators", gens}});
  }
  j["stats"] = {{"pops", rep.stats.pops}, {"splits", rep.stats.splits}, {"dead_ends", rep.stats.dead_ends}};

  std::ostringstream text;
  text << "f = " << upoly::to_string(f) << "  (p = " << mod.p() << ", k = " << mod.k() << ")\n";
  text << "root_count: " << rep.root_count << "\n";
  for (std::size_t i = 0; i < rep.msis.size(); ++i) {
    const auto& m = rep.msis[i];
    text << "msi " << i + 1 << ": length " << m.length << ", degree " << m.degree << ", "
         << ideal_string(m.ideal.base()) << "\n";
  }
  text << "stats: pops " << rep.stats.pops << ", splits " << rep.stats.splits << ", dead_ends " << rep.stats.dead_ends
       << "\n";

  Verification v;
  if (spec.verify && under_cap(mod.pk())) {
    v.checked = true;
    const auto bf = oracle::brute_force_roots(f, mod);
    if (Int(static_cast<unsigned long>(bf.size())) != rep.root_count) {
      v.ok = false;
      v.diff = "engine root_count " + rep.root_count.get_str() + " vs brute force " + std::to_string(bf.size()) + "\n";
    }
  }
  return finish(j, spec, v, out, err, text.str());
}

int run_factors(const UPoly& f, const Modulus& mod, const JobSpec& spec, std::ostream& out, std::ostream& err) {
  if (upoly::is_zero(upoly::reduce(f, mod.pk()))) throw ParseError("the zero polynomial has no finite factor count");
  const FactorReport rep = count_basic_irreducible(f, mod);

  json j;
  j["p"] = mod.p().get_str();
  j["k"] = mod.k();
  j["degree"] = upoly::degree(upoly::reduce(f, mod.pk()));
  j["factor_count"] = rep.total.get_str();
  j["per_degree"] = json::object();
  for (const auto& [b, c] : rep.per_degree) j["per_degree"][std::to_string(b)] = c.get_str();
  j["components"] = json::array();
  for (const auto& c : rep.components)
    j["components"].push_back({{"b", c.component.b},
                               {"e", c.component.e},
                               {"t", c.component.t},
                               {"galois_roots", c.galois_roots.get_str()},
                               {"count", c.count.get_str()}});

  std::ostringstream text;
  text << "f = " << upoly::to_string(f) << "  (p = " << mod.p() << ", k = " << mod.k() << ")\n";
  text << "basic-irreducible factors: " << rep.total << "\n";
  for (const auto& [b, c] : rep.per_degree) text << "  degree " << b << ": " << c << "\n";
  for (const auto& c : rep.components)
    text << "component b=" << c.component.b << " e=" << c.component.e << " t=" << c.component.t
         << ": galois roots " << c.galois_roots << ", factors " << c.count << "\n";

  Verification v;
  if (spec.verify) {
    v.checked = true;
    for (const auto& [b, c] : rep.per_degree) {
      if (!under_cap(ipow(mod.pk(), b))) {
        v.checked = false;
        continue;
      }
      const auto bf = oracle::brute_force_basic_irreducible(f, mod, b);
      if (Int(static_cast<unsigned long>(bf)) != c) {
        v.ok = false;
        v.diff += "degree " + std::to_string(b) + ": engine " + c.get_str() + " vs brute force " +
                  std::to_string(bf) + "\n";
      }
    }
  }
  return finish(j, spec, v, out, err, text.str());
}

int run_igusa(const UPoly& f, const Int& p, const JobSpec& spec, std::ostream& out, std::ostream& err) {
  const SeriesPrefix s = poincare_prefix(f, p, spec.K, Exec::parallel, spec.normalize);
  std::optional<PadicCount> padic;
  if (s.disc_valuation) padic = count_padic_roots(f, p);

  json j;
  j["p"] = p.get_str();
  j["degree"] = upoly::degree(f);
  j["K"] = spec.K;
  j["N"] = json::array();
  for (const auto& c : s.coefficients) j["N"].push_back(c.get_str());
  j["disc_valuation"] = s.disc_valuation ? json(*s.disc_valuation) : json("infinite");
  j["padic_roots"] = padic ? json{{"count", padic->count.get_str()}, {"ell", padic->ell}} : json(nullptr);

  std::ostringstream text;
  text << "f = " << upoly::to_string(f) << "  (p = " << p << ")\n";
  text << "N_0..N_" << spec.K << ":";
  for (const auto& c : s.coefficients) text << " " << c;
  text << "\n";
  text << "v_p(disc): " << (s.disc_valuation ? std::to_string(*s.disc_valuation) : "infinite") << "\n";
  if (padic) text << "Z_p roots: " << padic->count << " (precision " << padic->ell << ")\n";

  Verification v;
  if (spec.verify) {
    v.checked = true;
    for (unsigned i = 1; i <= spec.K; ++i) {
      const Modulus mi(p, i);
      if (!under_cap(mi.pk())) {
        v.checked = false;
        break;
      }
      const auto bf = oracle::brute_force_roots(f, mi);
      if (Int(static_cast<unsigned long>(bf.size())) != s.coefficients[i]) {
        v.ok = false;
        v.diff += "N_" + std::to_string(i) + ": engine " + s.coefficients[i].get_str() + " vs brute force " +
                  std::to_string(bf.size()) + "\n";
      }
    }
  }
  return finish(j, spec, v, out, err, text.str());
}

}  // namespace

UPoly parse_polynomial(const std::string& text) {
  UPoly r = Parser(text).parse();
  upoly::trim(r);
  return r;
}

UPoly parse_coefficients(const std::string& text) {
  UPoly r;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty coefficient in list");
    std::string tok = item.substr(b, e - b + 1);
    if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
    Int c;
    if (tok.empty() || c.set_str(tok, 10) != 0) throw ParseError("bad coefficient '" + item + "'");
    r.push_back(c);
  }
  if (r.empty()) throw ParseError("empty coefficient list");
  upoly::trim(r);
  return r;
}

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    if (spec.threads > 0) omp_set_num_threads(spec.threads);
    const UPoly f = read_polynomial(spec);
    Int p;
    if (p.set_str(spec.p, 10) != 0) throw ParseError("p must be an integer");
    if (p < 2) throw InvalidModulus("p must be at least 2");
    if (spec.mode == Mode::igusa) {
      if (!is_prime(p)) throw InvalidModulus("p must be prime");
      return run_igusa(f, p, spec, out, err);
    }
    const Modulus mod(p, spec.k);
    if (spec.mode == Mode::roots) return run_roots(f, mod, spec, out, err);
    return run_factors(f, mod, spec, out, err);
  } catch (const NotMonicModP& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotMonic;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidModulus& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count roots and basic-irreducible factors of integer polynomials modulo prime powers"};
  JobSpec spec;
  std::string poly, coeffs, mode = "roots";
  bool no_normalize = false;
  auto* po = app.add_option("--poly", poly, "polynomial expression in x");
  auto* co = app.add_option("--coeffs", coeffs, "ascending coefficient list a0,a1,...");
  po->excludes(co);
  co->excludes(po);
  app.add_option("--p", spec.p, "prime p")->required();
  app.add_option("--k", spec.k, "exponent k >= 1")->check(CLI::PositiveNumber);
  app.add_option("--mode", mode, "roots | factors | igusa")->check(CLI::IsMember({"roots", "factors", "igusa"}));
  app.add_option("--K", spec.K, "series length in igusa mode");
  app.add_flag("--json", spec.json, "emit JSON");
  app.add_flag("--verify", spec.verify, "cross-check against brute force when small enough");
  app.add_option("--threads", spec.threads, "OpenMP threads for parallel kernels");
  app.add_flag("--no-normalize", no_normalize, "do not multiply f by lc(f)^{-1}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (po->count()) spec.poly = poly;
  if (co->count()) spec.coeffs = coeffs;
  spec.normalize = !no_normalize;
  spec.mode = mode == "factors" ? Mode::factors : mode == "igusa" ? Mode::igusa : Mode::roots;
  return run(spec, out, err);
}

}  // namespace pkroots::cli
