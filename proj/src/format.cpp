#include "hopfgrow/format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "hopfgrow/error.hpp"

namespace hopfgrow {

ParseContext ParseContext::of(const Presentation& p) {
  ParseContext c;
  c.cyclotomic_order = p.cyclotomic_order;
  c.transcendentals = p.transcendentals;
  c.group_names = p.group.names();
  for (const auto& g : p.gens) c.y_names.push_back(g.name);
  return c;
}

namespace {

struct Token {
  enum Kind { Num, Ident, Op, End } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Num, s.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i)});
      i = j;
    } else if (std::string("+-*/^()").find(c) != std::string::npos) {
      out.push_back({Token::Op, std::string(1, c)});
      ++i;
    } else {
      fail(ErrorKind::Usage, std::string("unexpected character '") + c + "' in expression '" + s + "'");
    }
  }
  out.push_back({Token::End, ""});
  return out;
}

int index_of(const std::vector<std::string>& v, const std::string& s) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] == s) return static_cast<int>(i);
  return -1;
}

void append_letter(std::vector<Letter>& ls, const Letter& l) {
  if (l.power == 0) return;
  if (!ls.empty() && ls.back().is_group == l.is_group && ls.back().index == l.index) {
    ls.back().power += l.power;
    if (ls.back().power == 0) ls.pop_back();
  } else {
    ls.push_back(l);
  }
}

RawElement product(const RawElement& a, const RawElement& b) {
  RawElement out;
  for (const auto& x : a)
    for (const auto& y : b) {
      RawTerm t{x.coeff * y.coeff, x.letters};
      for (const auto& l : y.letters) append_letter(t.letters, l);
      if (!t.coeff.is_zero()) out.push_back(std::move(t));
    }
  return out;
}

bool letter_free(const RawElement& r) {
  for (const auto& t : r)
    if (!t.letters.empty()) return false;
  return true;
}

Scalar scalar_value(const RawElement& r) {
  Scalar s(0);
  for (const auto& t : r) s += t.coeff;
  return s;
}

class Parser {
 public:
  Parser(const std::string& text, const ParseContext& ctx) : text_(text), toks_(tokenize(text)), ctx_(ctx) {}

  RawElement parse() {
    RawElement r = expr();
    if (peek().kind != Token::End) error("unexpected '" + peek().text + "'");
    return r;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is_op(const char* op) const { return peek().kind == Token::Op && peek().text == op; }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::Usage, "cannot parse '" + text_ + "': " + msg);
  }

  RawElement expr() {
    RawElement out;
    bool negate = false;
    if (is_op("+") || is_op("-")) {
      negate = peek().text == "-";
      ++pos_;
    }
    for (;;) {
      RawElement t = term();
      for (auto& x : t) {
        if (negate) x.coeff = -x.coeff;
        out.push_back(std::move(x));
      }
      if (is_op("+") || is_op("-")) {
        negate = peek().text == "-";
        ++pos_;
        continue;
      }
      break;
    }
    return out;
  }

  RawElement term() {
    RawElement acc{RawTerm{Scalar(1), {}}};
    bool first = true;
    for (;;) {
      const Token& t = peek();
      if (t.kind == Token::End || (t.kind == Token::Op && (t.text == "+" || t.text == "-" || t.text == ")"))) {
        if (first) error("missing term");
        break;
      }
      if (is_op("*")) {
        if (first) error("dangling '*'");
        ++pos_;
        continue;
      }
      if (is_op("/")) {
        if (first) error("dangling '/'");
        ++pos_;
        RawElement d = factor();
        if (!letter_free(d)) error("division by a non-scalar");
        Scalar dv = scalar_value(d);
        if (dv.is_zero()) error("division by zero");
        for (auto& x : acc) x.coeff /= dv;
        continue;
      }
      acc = product(acc, factor());
      first = false;
    }
    return acc;
  }

  RawElement factor() {
    RawElement a = atom();
    if (!is_op("^")) return a;
    ++pos_;
    bool neg = false;
    if (is_op("-")) {
      neg = true;
      ++pos_;
    }
    if (peek().kind != Token::Num) error("exponent must be an integer");
    long e = std::stol(peek().text);
    ++pos_;
    if (neg) e = -e;
    if (letter_free(a)) return {RawTerm{scalar_value(a).pow(e), {}}};
    if (a.size() == 1 && a[0].coeff.is_one() && a[0].letters.size() == 1) {
      Letter l = a[0].letters[0];
      l.power *= static_cast<int>(e);
      if (!l.is_group && l.power < 0) error("negative power of a skew-primitive generator");
      return {RawTerm{Scalar(1), {l}}};
    }
    if (e < 0) error("negative power of a non-scalar expression");
    RawElement r{RawTerm{Scalar(1), {}}};
    for (long k = 0; k < e; ++k) r = product(r, a);
    return r;
  }

  RawElement atom() {
    Token t = peek();
    if (t.kind == Token::Num) {
      ++pos_;
      return {RawTerm{Scalar(Rational(mpz_class(t.text))), {}}};
    }
    if (t.kind == Token::Op && t.text == "(") {
      ++pos_;
      RawElement r = expr();
      if (!is_op(")")) error("missing ')'");
      ++pos_;
      return r;
    }
    if (t.kind == Token::Ident) {
      ++pos_;
      return {name(t.text)};
    }
    error("unexpected '" + t.text + "'");
  }

  RawTerm name(const std::string& s) {
    if (int i = index_of(ctx_.transcendentals, s); i >= 0) return RawTerm{Scalar::var(i), {}};
    if (int i = index_of(ctx_.group_names, s); i >= 0) return RawTerm{Scalar(1), {Letter{true, i, 1}}};
    if (int i = index_of(ctx_.y_names, s); i >= 0) return RawTerm{Scalar(1), {Letter{false, i, 1}}};
    if (s == "zeta") return RawTerm{Scalar(CycloRational::root_of_unity(ctx_.cyclotomic_order, 1)), {}};
    if (s.rfind("zeta", 0) == 0 && s.size() > 4 &&
        std::all_of(s.begin() + 4, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      long m = std::stol(s.substr(4));
      if (m < 1 || m > 100000) error("unsupported root of unity " + s);
      return RawTerm{Scalar(CycloRational::root_of_unity(m, 1)), {}};
    }
    error("unknown name '" + s + "'");
  }

  std::string text_;
  std::vector<Token> toks_;
  const ParseContext& ctx_;
  size_t pos_ = 0;
};

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Usage, where + ": missing field '" + key + "'");
  return j.at(key);
}

long as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(ErrorKind::Usage, where + ": expected an integer");
  return j.get<long>();
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational r;
    if (r.set_str(j.get<std::string>(), 10) != 0) fail(ErrorKind::Usage, "bad rational '" + j.get<std::string>() + "'");
    r.canonicalize();
    return r;
  }
  fail(ErrorKind::Usage, "expected a rational number");
}

json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

LaurentPoly poly_from_json(const json& terms, const ParseContext& ctx) {
  LaurentPoly p;
  for (const auto& t : terms) {
    const json& c = require(t, "coeff", "scalar term");
    CycloRational cr;
    if (c.is_object()) {
      int order = static_cast<int>(as_int(require(c, "order", "coefficient"), "coefficient order"));
      std::vector<Rational> cs;
      for (const auto& x : require(c, "coeffs", "coefficient")) cs.push_back(rational_from_json(x));
      cr = CycloRational::from_coeffs(order, std::move(cs));
    } else if (c.is_array()) {
      std::vector<Rational> cs;
      for (const auto& x : c) cs.push_back(rational_from_json(x));
      cr = CycloRational::from_coeffs(ctx.cyclotomic_order, std::move(cs));
    } else {
      cr = CycloRational(rational_from_json(c));
    }
    Exps e{};
    if (t.contains("exps")) {
      const json& ej = t.at("exps");
      if (ej.size() > ctx.transcendentals.size()) fail(ErrorKind::Usage, "scalar term has too many exponents");
      for (size_t i = 0; i < ej.size(); ++i) e[i] = static_cast<int32_t>(as_int(ej[i], "exponent"));
    }
    p += LaurentPoly::monomial(cr, e);
  }
  return p;
}

json poly_to_json(const LaurentPoly& p, size_t nvars) {
  json arr = json::array();
  for (const auto& t : p.terms()) {
    json cj;
    if (t.c.is_rational()) {
      cj = rational_to_json(t.c.rational_part());
    } else {
      json cs = json::array();
      for (const auto& x : t.c.coeffs()) cs.push_back(rational_to_json(x));
      cj = json{{"order", t.c.conductor()}, {"coeffs", cs}};
    }
    json ej = json::array();
    for (size_t i = 0; i < nvars; ++i) ej.push_back(t.e[i]);
    arr.push_back(json{{"coeff", cj}, {"exps", ej}});
  }
  return arr;
}

}  // namespace

RawElement parse_expression(const std::string& text, const ParseContext& ctx) { return Parser(text, ctx).parse(); }

Scalar parse_scalar(const std::string& text, const ParseContext& ctx) {
  RawElement r = parse_expression(text, ctx);
  if (!letter_free(r)) fail(ErrorKind::Usage, "'" + text + "' is not a scalar");
  return scalar_value(r);
}

GroupElem parse_group_element(const std::string& text, const Presentation& p) {
  RawElement r = parse_expression(text, ParseContext::of(p));
  GroupElem g = p.group.identity();
  bool ok = r.size() == 1 && r[0].coeff.is_one();
  if (ok)
    for (const auto& l : r[0].letters) {
      if (!l.is_group) ok = false;
      else g = p.group.mul(g, p.group.generator(l.index, l.power));
    }
  if (!ok) fail(ErrorKind::Usage, "'" + text + "' is not a group element");
  return g;
}

AlgebraElement parse_element(const Algebra& alg, const std::string& text) {
  return alg.normalize(parse_expression(text, ParseContext::of(alg.pres())));
}

Scalar scalar_from_json(const json& j, const ParseContext& ctx) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>(), ctx);
  if (j.is_object() && j.contains("root")) {
    const json& r = j.at("root");
    if (!r.is_array() || r.size() != 2) fail(ErrorKind::Usage, "root must be [a, d]");
    long a = as_int(r[0], "root exponent"), d = as_int(r[1], "root order");
    long n = ctx.cyclotomic_order;
    long got = Root::make(a, n).order();
    if (got != d)
      fail(ErrorKind::Usage, "zeta^" + std::to_string(a) + " has order " + std::to_string(got) + " for cyclotomic order " +
                                 std::to_string(n) + ", not " + std::to_string(d));
    UnitMonomial u{Root::make(a, n), Exps{}};
    if (j.contains("exps")) {
      const json& ej = j.at("exps");
      if (ej.size() > ctx.transcendentals.size()) fail(ErrorKind::Usage, "unit monomial has too many exponents");
      for (size_t i = 0; i < ej.size(); ++i) u.exps[i] = static_cast<int32_t>(as_int(ej[i], "exponent"));
    }
    return Scalar::from_unit(u);
  }
  if (j.is_object() && j.contains("num")) {
    LaurentPoly num = poly_from_json(j.at("num"), ctx);
    LaurentPoly den = j.contains("den") ? poly_from_json(j.at("den"), ctx) : LaurentPoly(CycloRational(1));
    return Scalar(num, den);
  }
  fail(ErrorKind::Usage, "unrecognized scalar: " + j.dump());
}

json scalar_to_json(const Scalar& s, int cyclotomic_order) {
  const size_t nvars = static_cast<size_t>(std::max(0, s.num().max_var() + 1));
  if (s.is_polynomial() && s.num().terms().size() <= 1) {
    if (s.is_zero()) return 0;
    const auto& t = s.num().terms()[0];
    if (nvars == 0 && t.c.is_rational()) return rational_to_json(t.c.rational_part());
    if (auto u = as_unit_monomial(s); u && cyclotomic_order % u->root.den == 0) {
      json ej = json::array();
      for (size_t i = 0; i < nvars; ++i) ej.push_back(u->exps[i]);
      return json{{"root", {u->root.num * (cyclotomic_order / u->root.den), u->root.den}}, {"exps", ej}};
    }
  }
  size_t nv = static_cast<size_t>(std::max({0, s.num().max_var() + 1, s.den().max_var() + 1}));
  json out{{"num", poly_to_json(s.num(), nv)}};
  if (!s.is_polynomial()) out["den"] = poly_to_json(s.den(), nv);
  return out;
}

Presentation presentation_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::Usage, "presentation must be a JSON object");
  Presentation p;
  if (j.contains("name")) p.name = j.at("name").get<std::string>();
  if (j.contains("scalars")) {
    const json& s = j.at("scalars");
    if (s.contains("cyclotomic_order")) p.cyclotomic_order = static_cast<int>(as_int(s.at("cyclotomic_order"), "cyclotomic_order"));
    if (s.contains("transcendentals"))
      for (const auto& t : s.at("transcendentals")) p.transcendentals.push_back(t.get<std::string>());
  }
  const json& g = require(j, "group", "presentation");
  int r = static_cast<int>(as_int(require(g, "free_rank", "group"), "free_rank"));
  std::vector<int> tors;
  if (g.contains("torsion"))
    for (const auto& t : g.at("torsion")) tors.push_back(static_cast<int>(as_int(t, "torsion order")));
  std::vector<std::string> names;
  if (g.contains("names"))
    for (const auto& t : g.at("names")) names.push_back(t.get<std::string>());
  p.group = Group(r, tors, names);
  const int ng = p.group.num_generators();

  ParseContext ctx;
  ctx.cyclotomic_order = p.cyclotomic_order;
  ctx.transcendentals = p.transcendentals;
  ctx.group_names = p.group.names();
  for (const auto& gj : require(j, "generators", "presentation")) ctx.y_names.push_back(require(gj, "name", "generator").get<std::string>());
  for (const auto& gj : j.at("generators")) {
    SkewGenerator y;
    y.name = gj.at("name").get<std::string>();
    const std::string where = "generator '" + y.name + "'";
    const json& w = require(gj, "weight", where);
    if (static_cast<int>(w.size()) != ng) fail(ErrorKind::Usage, where + ": weight needs one entry per group generator");
    y.weight = p.group.identity();
    for (int k = 0; k < ng; ++k) y.weight[k] = static_cast<int32_t>(as_int(w[k], where + " weight"));
    y.weight = p.group.canonical(y.weight);
    const json& ch = require(gj, "character", where);
    if (static_cast<int>(ch.size()) != ng) fail(ErrorKind::Usage, where + ": character needs one entry per group generator");
    for (const auto& c : ch) y.character.push_back(scalar_from_json(c, ctx));
    if (gj.contains("tau")) {
      if (static_cast<int>(gj.at("tau").size()) != ng) fail(ErrorKind::Usage, where + ": tau needs one entry per group generator");
      for (const auto& c : gj.at("tau")) y.tau.push_back(scalar_from_json(c, ctx));
    } else {
      y.tau.assign(ng, Scalar(0));
    }
    p.gens.push_back(std::move(y));
  }
  if (j.contains("relations")) {
    for (const auto& rj : j.at("relations")) {
      const std::string lhs_text = require(rj, "lhs", "relation").get<std::string>();
      RawElement lhs = parse_expression(lhs_text, ctx);
      if (lhs.size() != 1 || !lhs[0].coeff.is_one()) fail(ErrorKind::Usage, "relation lhs '" + lhs_text + "' must be a single word");
      Relation rel;
      for (const auto& l : lhs[0].letters) {
        if (l.is_group || l.power < 1) fail(ErrorKind::Usage, "relation lhs '" + lhs_text + "' may only contain skew-primitive generators");
        rel.lhs += YWord(l.power, static_cast<char>(l.index));
      }
      const json& rhs = require(rj, "rhs", "relation");
      RawElement re = parse_expression(rhs.is_string() ? rhs.get<std::string>() : rhs.dump(), ctx);
      for (const auto& t : re) {
        NormalWord nw{p.group.identity(), ""};
        bool seen_y = false;
        for (const auto& l : t.letters) {
          if (l.is_group) {
            if (seen_y) fail(ErrorKind::Usage, "relation rhs terms must list group letters before skew-primitive ones");
            nw.g = p.group.mul(nw.g, p.group.generator(l.index, l.power));
          } else {
            seen_y = true;
            nw.w += YWord(l.power, static_cast<char>(l.index));
          }
        }
        rel.rhs.add(nw, t.coeff);
      }
      p.relations.push_back(std::move(rel));
    }
  }
  p.validate();
  return p;
}

json group_to_json(const Presentation& p, const GroupElem& g) {
  json e = json::array();
  for (int32_t x : g) e.push_back(x);
  return json{{"text", p.group.to_string(g)}, {"exps", e}};
}

json element_to_json(const Presentation& p, const AlgebraElement& x) {
  json terms = json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    terms.push_back(json{{"coeff", scalar_to_json(it->second, p.cyclotomic_order)},
                         {"group", group_to_json(p, it->first.g)["exps"]},
                         {"word", p.yword_string(it->first.w)}});
  }
  return json{{"text", p.element_string(x)}, {"terms", terms}};
}

json presentation_to_json(const Presentation& p) {
  json gens = json::array();
  for (const auto& y : p.gens) {
    json w = json::array(), ch = json::array(), tau = json::array();
    for (int32_t x : y.weight) w.push_back(x);
    for (const auto& c : y.character) ch.push_back(scalar_to_json(c, p.cyclotomic_order));
    for (const auto& c : y.tau) tau.push_back(scalar_to_json(c, p.cyclotomic_order));
    gens.push_back(json{{"name", y.name}, {"weight", w}, {"character", ch}, {"tau", tau}});
  }
  json rels = json::array();
  for (const auto& r : p.relations) {
    std::string rhs = r.rhs.is_zero() ? "0" : p.element_string(r.rhs);
    rels.push_back(json{{"lhs", p.yword_string(r.lhs)}, {"rhs", rhs}});
  }
  json out;
  if (!p.name.empty()) out["name"] = p.name;
  out["scalars"] = json{{"cyclotomic_order", p.cyclotomic_order}, {"transcendentals", p.transcendentals}};
  out["group"] = json{{"free_rank", p.group.free_rank()}, {"torsion", p.group.torsion()}, {"names", p.group.names()}};
  out["generators"] = gens;
  out["relations"] = rels;
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Usage, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::Usage, "'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace hopfgrow
