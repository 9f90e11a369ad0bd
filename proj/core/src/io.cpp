#include "artin/io.hpp"

#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace artin {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Character-level scanner shared by the ring and divided grammars.
class Lexer {
 public:
  Lexer(const std::string& text, std::string where) : s_(text), where_(std::move(where)) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    if (pos_ >= s_.size() || !ident_start(s_[pos_])) fail("expected identifier");
    size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  std::string digits() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    return s_.substr(start, pos_ - start);
  }
  int integer() {
    const std::string d = digits();
    try {
      return std::stoi(d);
    } catch (const std::exception&) {
      fail("integer out of range: " + d);
    }
    return 0;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(where_, 1, msg + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

 private:
  std::string s_;
  std::string where_;
  size_t pos_ = 0;
};

class RingPolyParser {
 public:
  RingPolyParser(const std::string& text, const VariableTable& table, const FieldDescriptor& field)
      : lex_(text, "<polynomial>"), table_(table), field_(field) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (!lex_.done()) lex_.fail("trailing input");
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = Polynomial::zero(table_, field_);
    bool negative = lex_.eat('-');
    if (!negative) lex_.eat('+');
    while (true) {
      Polynomial t = term();
      acc = negative ? acc - t : acc + t;
      if (lex_.eat('-'))
        negative = true;
      else if (lex_.eat('+'))
        negative = false;
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (lex_.eat('*')) {
        acc = acc * factor();
        continue;
      }
      const char c = lex_.peek();
      if (ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '(')
        acc = acc * factor();
      else
        break;
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (lex_.eat('^')) {
      if (lex_.peek() == '[') lex_.fail("divided powers ^[k] are not ring syntax");
      base = base.pow(lex_.integer());
    }
    return base;
  }

  Polynomial primary() {
    const char c = lex_.peek();
    if (c == '(') {
      lex_.expect('(');
      Polynomial p = expr();
      lex_.expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(table_, number());
    const std::string name = lex_.ident();
    const auto idx = table_.index_of(name);
    if (!idx) lex_.fail("unknown variable '" + name + "'");
    return Polynomial::variable(table_, field_, *idx);
  }

  Scalar number() {
    const std::string num = lex_.digits();
    if (lex_.eat('/')) {
      const std::string den = lex_.digits();
      mpq_class v(num + "/" + den);
      v.canonicalize();
      return Scalar::from_mpq(v, field_);
    }
    return Scalar::from_mpq(mpq_class(num), field_);
  }

  Lexer lex_;
  const VariableTable& table_;
  const FieldDescriptor& field_;
};

class DividedPolyParser {
 public:
  DividedPolyParser(const std::string& text, const VariableTable& table,
                    const FieldDescriptor& field)
      : lex_(text, "<divided polynomial>"), table_(table), field_(field) {}

  DividedPolynomial parse() {
    DividedPolynomial p = expr();
    if (!lex_.done()) lex_.fail("trailing input");
    return p;
  }

 private:
  DividedPolynomial one() {
    return DividedPolynomial::monomial_term(table_, Monomial::unit(table_), Scalar::one(field_));
  }

  DividedPolynomial expr() {
    DividedPolynomial acc = DividedPolynomial::zero(table_, field_);
    bool negative = lex_.eat('-');
    if (!negative) lex_.eat('+');
    while (true) {
      DividedPolynomial t = term();
      acc = negative ? acc - t : acc + t;
      if (lex_.eat('-'))
        negative = true;
      else if (lex_.eat('+'))
        negative = false;
      else
        break;
    }
    return acc;
  }

  DividedPolynomial term() {
    DividedPolynomial acc = factor();
    while (true) {
      if (lex_.eat('*')) {
        acc = dp_multiply(acc, factor());
        continue;
      }
      const char c = lex_.peek();
      if (ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '(')
        acc = dp_multiply(acc, factor());
      else
        break;
    }
    return acc;
  }

  DividedPolynomial factor() {
    const char c = lex_.peek();
    if (c == '(') {
      lex_.expect('(');
      DividedPolynomial p = expr();
      lex_.expect(')');
      if (lex_.peek() == '^') lex_.fail("cannot exponentiate a parenthesized divided expression");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return one().scaled(number());
    const std::string name = lex_.ident();
    const auto idx = table_.index_of_dual(name);
    if (!idx) lex_.fail("unknown dual variable '" + name + "'");
    int exp = 1;
    if (lex_.eat('^')) {
      // Divided powers are written X^[k]; a bare caret is ambiguous here.
      if (!lex_.eat('[')) lex_.fail("divided powers must be written ^[k]");
      exp = lex_.integer();
      lex_.expect(']');
    }
    std::vector<int> exps(table_.size(), 0);
    exps[*idx] = exp;
    return DividedPolynomial::monomial_term(table_, Monomial(std::move(exps), table_),
                                            Scalar::one(field_));
  }

  Scalar number() {
    const std::string num = lex_.digits();
    if (lex_.eat('/')) {
      const std::string den = lex_.digits();
      mpq_class v(num + "/" + den);
      v.canonicalize();
      return Scalar::from_mpq(v, field_);
    }
    return Scalar::from_mpq(mpq_class(num), field_);
  }

  Lexer lex_;
  const VariableTable& table_;
  const FieldDescriptor& field_;
};

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

struct FileLine {
  int number;
  std::string text;  // comment-stripped, trimmed, nonempty
};

std::vector<FileLine> logical_lines(const std::string& text) {
  std::vector<FileLine> lines;
  std::istringstream is(text);
  std::string raw;
  int n = 0;
  while (std::getline(is, raw)) {
    ++n;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = strip(raw);
    if (!raw.empty()) lines.push_back({n, raw});
  }
  return lines;
}

struct AlgebraFileBuilder {
  std::string filename;
  std::optional<FieldDescriptor> field;
  std::optional<VariableTable> table;
  std::optional<std::string> dual_text;
  std::vector<std::string> ideal_texts;
  std::string label;
  std::optional<int> cap;
  int dual_line = 0;

  [[noreturn]] void fail(int line, const std::string& msg) const {
    throw ParseError(filename, line, msg);
  }

  void consume(const FileLine& line) {
    std::istringstream is(line.text);
    std::string keyword;
    is >> keyword;
    std::string rest;
    std::getline(is, rest);
    rest = strip(rest);
    if (keyword == "format") {
      if (rest != "1") fail(line.number, "unsupported format version '" + rest + "'");
    } else if (keyword == "field") {
      const auto toks = split_ws(rest);
      if (toks.size() == 1 && toks[0] == "Q")
        field = FieldDescriptor::rationals();
      else if (toks.size() == 2 && toks[0] == "GF") {
        try {
          field = FieldDescriptor::prime_field(std::stol(toks[1]));
        } catch (const InputError& e) {
          fail(line.number, e.what());
        } catch (const std::exception&) {
          fail(line.number, "bad prime '" + toks[1] + "'");
        }
      } else
        fail(line.number, "expected 'field Q' or 'field GF <p>'");
    } else if (keyword == "vars") {
      std::vector<std::string> names;
      std::vector<int> weights;
      for (const std::string& tok : split_ws(rest)) {
        const size_t colon = tok.find(':');
        std::string name = tok.substr(0, colon == std::string::npos ? tok.size() : colon);
        int weight = 1;
        if (colon != std::string::npos) {
          try {
            weight = std::stoi(tok.substr(colon + 1));
          } catch (const std::exception&) {
            fail(line.number, "bad weight in '" + tok + "'");
          }
        }
        names.push_back(std::move(name));
        weights.push_back(weight);
      }
      try {
        table = VariableTable(std::move(names), std::move(weights));
      } catch (const InputError& e) {
        fail(line.number, e.what());
      }
    } else if (keyword == "dual") {
      if (dual_text || !ideal_texts.empty())
        fail(line.number, "exactly one of 'dual' or 'ideal' is allowed");
      dual_text = rest;
      dual_line = line.number;
    } else if (keyword == "ideal") {
      if (dual_text) fail(line.number, "exactly one of 'dual' or 'ideal' is allowed");
      std::istringstream parts(rest);
      std::string piece;
      while (std::getline(parts, piece, ';')) {
        piece = strip(piece);
        if (!piece.empty()) ideal_texts.push_back(piece);
      }
      dual_line = line.number;
    } else if (keyword == "label") {
      label = rest;
    } else if (keyword == "cap") {
      try {
        cap = std::stoi(rest);
      } catch (const std::exception&) {
        fail(line.number, "bad cap '" + rest + "'");
      }
    } else {
      fail(line.number, "unknown directive '" + keyword + "'");
    }
  }

  AlgebraSpec build() const {
    if (!field) fail(1, "missing 'field' line");
    if (!table) fail(1, "missing 'vars' line");
    if (!dual_text && ideal_texts.empty()) fail(1, "missing 'dual' or 'ideal' line");
    AlgebraSpec spec;
    spec.field = *field;
    spec.table = *table;
    spec.label = label;
    if (cap) spec.degree_cap = *cap;
    try {
      if (dual_text) {
        spec.presentation =
            DualPresentation{parse_divided_polynomial(*dual_text, *table, *field)};
      } else {
        std::vector<Polynomial> gens;
        for (const std::string& text : ideal_texts)
          gens.push_back(parse_polynomial(text, *table, *field));
        spec.presentation = IdealPresentation{std::move(gens)};
      }
    } catch (const ParseError& e) {
      fail(dual_line, e.what());
    }
    return spec;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Splits "x=x*y c=z" into (name, value) pairs; a new pair starts at each
// whitespace-preceded identifier directly followed by '='.
std::vector<std::pair<std::string, std::string>> parse_assignments(const std::string& text,
                                                                   const std::string& file,
                                                                   int line) {
  std::vector<std::pair<size_t, std::string>> starts;
  for (size_t i = 0; i < text.size(); ++i) {
    if (!ident_start(text[i])) continue;
    if (i > 0 && !std::isspace(static_cast<unsigned char>(text[i - 1]))) continue;
    size_t k = i;
    while (k < text.size() && ident_char(text[k])) ++k;
    if (k < text.size() && text[k] == '=') starts.emplace_back(i, text.substr(i, k - i));
  }
  if (starts.empty()) throw ParseError(file, line, "expected var=<polynomial> assignments");
  std::vector<std::pair<std::string, std::string>> out;
  for (size_t s = 0; s < starts.size(); ++s) {
    const size_t begin = starts[s].first + starts[s].second.size() + 1;  // past '='
    const size_t end = s + 1 < starts.size() ? starts[s + 1].first : text.size();
    out.emplace_back(starts[s].second, strip(text.substr(begin, end - begin)));
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VariableTable& table,
                            const FieldDescriptor& field) {
  return RingPolyParser(text, table, field).parse();
}

DividedPolynomial parse_divided_polynomial(const std::string& text, const VariableTable& table,
                                           const FieldDescriptor& field) {
  return DividedPolyParser(text, table, field).parse();
}

Partition parse_partition(const std::string& text) {
  const std::string t = strip(text);
  if (t == "0" || t.empty()) return Partition();
  std::vector<int> parts;
  std::istringstream is(t);
  std::string piece;
  while (std::getline(is, piece, ',')) {
    try {
      parts.push_back(std::stoi(strip(piece)));
    } catch (const std::exception&) {
      throw ParseError("<partition>", 1, "bad part '" + piece + "'");
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const InputError& e) {
    throw ParseError("<partition>", 1, e.what());
  }
}

AlgebraSpec parse_algebra_file(const std::string& text, const std::string& filename) {
  AlgebraFileBuilder builder;
  builder.filename = filename;
  for (const FileLine& line : logical_lines(text)) builder.consume(line);
  return builder.build();
}

AlgebraSpec load_algebra_file(const std::string& path) {
  return parse_algebra_file(read_file(path), path);
}

ExtensionTriple parse_triple_file(const std::string& text, const std::string& filename,
                                  const std::string& include_dir) {
  std::array<std::vector<FileLine>, 3> sections;
  std::vector<FileLine> iota_lines, pi_lines;
  int current = -1;
  for (const FileLine& line : logical_lines(text)) {
    if (line.text == "[A]" || line.text == "[B]" || line.text == "[C]") {
      current = line.text[1] - 'A';
      continue;
    }
    std::istringstream is(line.text);
    std::string keyword;
    is >> keyword;
    if (keyword == "iota") {
      iota_lines.push_back(line);
    } else if (keyword == "pi") {
      pi_lines.push_back(line);
    } else {
      if (current < 0) throw ParseError(filename, line.number, "line outside [A]/[B]/[C] section");
      sections[current].push_back(line);
    }
  }

  std::array<std::optional<AlgebraSpec>, 3> specs;
  for (int s = 0; s < 3; ++s) {
    if (sections[s].empty())
      throw ParseError(filename, 1, std::string("missing section [") +
                                        static_cast<char>('A' + s) + "]");
    if (sections[s].size() == 1) {
      std::istringstream is(sections[s][0].text);
      std::string keyword, rest;
      is >> keyword;
      std::getline(is, rest);
      if (keyword == "include") {
        const std::filesystem::path p =
            std::filesystem::path(include_dir) / strip(rest);
        specs[s] = load_algebra_file(p.string());
        continue;
      }
    }
    AlgebraFileBuilder builder;
    builder.filename = filename;
    for (const FileLine& line : sections[s]) builder.consume(line);
    specs[s] = builder.build();
  }

  GradedAlgebra a = GradedAlgebra::build(std::move(*specs[0]));
  GradedAlgebra b = GradedAlgebra::build(std::move(*specs[1]));
  GradedAlgebra c = GradedAlgebra::build(std::move(*specs[2]));

  auto build_map = [&](const std::vector<FileLine>& lines, const VariableTable& source,
                       const VariableTable& target, const FieldDescriptor& field,
                       const std::string& which) {
    RingMapSpec map;
    map.source = source;
    map.target = target;
    map.images.assign(source.size(), Polynomial::zero(target, field));
    std::vector<bool> assigned(source.size(), false);
    for (const FileLine& line : lines) {
      const std::string rest = strip(line.text.substr(which.size()));
      for (const auto& [name, value] : parse_assignments(rest, filename, line.number)) {
        const auto idx = source.index_of(name);
        if (!idx)
          throw ParseError(filename, line.number,
                           which + ": '" + name + "' is not a source variable");
        if (assigned[*idx])
          throw ParseError(filename, line.number, which + ": '" + name + "' assigned twice");
        try {
          map.images[*idx] = parse_polynomial(value, target, field);
        } catch (const ParseError& e) {
          throw ParseError(filename, line.number, e.what());
        }
        assigned[*idx] = true;
      }
    }
    for (int i = 0; i < source.size(); ++i)
      if (!assigned[i])
        throw ParseError(filename, 1, which + " does not cover variable '" + source.name(i) + "'");
    return map;
  };

  if (iota_lines.empty()) throw ParseError(filename, 1, "missing iota assignments");
  if (pi_lines.empty()) throw ParseError(filename, 1, "missing pi assignments");
  RingMapSpec iota = build_map(iota_lines, a.table(), c.table(), a.field(), "iota");
  RingMapSpec pi = build_map(pi_lines, c.table(), b.table(), c.field(), "pi");
  return ExtensionTriple{std::move(a), std::move(b), std::move(c), std::move(iota), std::move(pi)};
}

ExtensionTriple load_triple_file(const std::string& path) {
  const std::filesystem::path p(path);
  return parse_triple_file(read_file(path), path, p.parent_path().string());
}

std::string render_algebra_file(const AlgebraSpec& spec) {
  std::ostringstream os;
  os << "field "
     << (spec.field.kind == FieldKind::Rationals ? "Q"
                                                 : "GF " + std::to_string(spec.field.characteristic))
     << "\n";
  os << "vars";
  for (int i = 0; i < spec.table.size(); ++i)
    os << " " << spec.table.name(i) << ":" << spec.table.weight(i);
  os << "\n";
  if (spec.is_dual()) {
    os << "dual " << spec.dual_generator().str() << "\n";
  } else {
    os << "ideal ";
    const auto& gens = spec.ideal_generators();
    for (size_t i = 0; i < gens.size(); ++i) os << (i ? "; " : "") << gens[i].str();
    os << "\n";
  }
  if (!spec.label.empty()) os << "label " << spec.label << "\n";
  return os.str();
}

std::string render_triple_file(const ExtensionTriple& t) {
  std::ostringstream os;
  os << "[A]\n" << render_algebra_file(t.A.spec());
  os << "[B]\n" << render_algebra_file(t.B.spec());
  os << "[C]\n" << render_algebra_file(t.C.spec());
  os << "iota";
  for (int i = 0; i < t.A.table().size(); ++i)
    os << " " << t.A.table().name(i) << "=" << t.iota.images[i].str();
  os << "\npi";
  for (int i = 0; i < t.C.table().size(); ++i)
    os << " " << t.C.table().name(i) << "=" << t.pi.images[i].str();
  os << "\n";
  return os.str();
}

ordered_json partition_json(const Partition& p) {
  ordered_json arr = ordered_json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

ordered_json int_vector_json(const std::vector<int>& v) {
  ordered_json arr = ordered_json::array();
  for (int x : v) arr.push_back(x);
  return arr;
}

std::string element_string(const GradedAlgebra& a, const Element& e) {
  return a.element_to_polynomial(e).str();
}

ordered_json extension_report_json(const ExtensionReport& rep) {
  ordered_json j;
  j["iota_well_defined"] = rep.iota_well_defined;
  j["pi_well_defined"] = rep.pi_well_defined;
  j["pi_surjective"] = rep.pi_surjective;
  j["kernel_condition"] = rep.kernel_condition;
  j["dim_product"] = rep.dim_product;
  j["criterion"] = rep.criterion;
  if (!rep.failure_detail.empty()) j["failure_detail"] = rep.failure_detail;
  return j;
}

ordered_json jordan_report_json(const GradedAlgebra& a, const JordanReport& rep) {
  ordered_json j;
  j["element"] = element_string(a, rep.element);
  j["rank_sequence"] = int_vector_json(rep.rank_sequence);
  j["partition"] = partition_json(rep.partition);
  j["hf_conjugate"] = partition_json(rep.hf_conjugate);
  j["hilbert_function_used"] = rep.used_local_hilbert ? "local" : "graded";
  j["verdict"] = rep.sljt ? "SLJT" : "NotSLJT";
  return j;
}

ordered_json lefschetz_report_json(const GradedAlgebra& a, const LefschetzReport& rep) {
  ordered_json j;
  j["mode"] = rep.mode == CertifyMode::SL_graded ? "SL_graded" : "SLJT_local";
  j["hilbert_used"] = int_vector_json(rep.hilbert_used);
  j["target"] = partition_json(rep.target);
  if (rep.sampled) j["sampled"] = partition_json(*rep.sampled);
  if (rep.witness) j["witness"] = element_string(a, *rep.witness);
  if (!rep.obstruction.empty()) j["obstruction"] = rep.obstruction;
  j["verdict"] = rep.verdict;
  return j;
}

}  // namespace artin
