#include "lsa/algebra_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace lsa {
namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

/// Parses the tokens after '=' as a vector: either the single token "0"
/// or alternating coefficient / basis-name pairs.
SparseVec parse_value(const std::vector<std::string>& tokens, std::size_t from,
                      const std::unordered_map<std::string, std::uint32_t>& index,
                      std::size_t line_no) {
  if (from >= tokens.size()) fail(line_no, "missing value after '='");
  if (tokens.size() == from + 1 && tokens[from] == "0") return SparseVec{};
  if ((tokens.size() - from) % 2 != 0)
    fail(line_no, "value must be '0' or coefficient/name pairs");
  std::vector<SparseVec::Term> terms;
  for (std::size_t i = from; i < tokens.size(); i += 2) {
    Rational c;
    try {
      c = parse_rational(tokens[i]);
    } catch (const std::exception&) {
      fail(line_no, "bad coefficient '" + tokens[i] + "'");
    }
    auto it = index.find(tokens[i + 1]);
    if (it == index.end()) fail(line_no, "unknown basis element '" + tokens[i + 1] + "'");
    terms.emplace_back(it->second, c);
  }
  return SparseVec(std::move(terms));
}

std::string format_value(const SparseVec& v, const GradedBasis& basis) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, c] : v) {
    if (!out.empty()) out += ' ';
    out += format_rational(c);
    out += ' ';
    out += basis.names[idx];
  }
  return out;
}

}  // namespace

LeibnizSuperalgebra AlgebraFile::as_leibniz() const {
  if (is_dialgebra) throw std::invalid_argument("file describes a dialgebra, not a Leibniz algebra");
  return LeibnizSuperalgebra{basis, bracket};
}

SuperDialgebra AlgebraFile::as_dialgebra() const {
  if (!is_dialgebra) throw std::invalid_argument("file describes a Leibniz algebra, not a dialgebra");
  return SuperDialgebra{basis, left, right, unit};
}

AlgebraFile parse_algebra(std::istream& in) {
  std::optional<bool> is_dialgebra;
  std::vector<std::pair<std::string, Parity>> names;
  std::unordered_map<std::string, std::uint32_t> index;

  struct Entry {
    std::uint32_t a, b;
    SparseVec value;
    std::size_t line_no;
  };
  std::vector<Entry> bracket_entries, left_entries, right_entries;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, Rational>> form_entries;
  std::optional<SparseVec> unit;
  bool saw_form = false;

  auto lookup = [&](const std::string& name, std::size_t line_no) -> std::uint32_t {
    auto it = index.find(name);
    if (it == index.end()) fail(line_no, "unknown basis element '" + name + "'");
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  bool basis_closed = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];

    if (head == "kind") {
      if (is_dialgebra.has_value()) fail(line_no, "duplicate 'kind' line");
      if (tokens.size() != 2) fail(line_no, "expected: kind leibniz|dialgebra");
      if (tokens[1] == "leibniz") is_dialgebra = false;
      else if (tokens[1] == "dialgebra") is_dialgebra = true;
      else fail(line_no, "unknown kind '" + tokens[1] + "'");
      continue;
    }
    if (head == "basis") {
      if (basis_closed) fail(line_no, "'basis' lines must precede all product lines");
      if (tokens.size() != 3) fail(line_no, "expected: basis <name> <0|1>");
      Parity p;
      if (tokens[2] == "0") p = Parity::even;
      else if (tokens[2] == "1") p = Parity::odd;
      else fail(line_no, "parity must be 0 or 1");
      if (!index.emplace(tokens[1], static_cast<std::uint32_t>(names.size())).second)
        fail(line_no, "duplicate basis element '" + tokens[1] + "'");
      names.emplace_back(tokens[1], p);
      continue;
    }

    // Everything else refers to basis elements, so the basis is complete.
    basis_closed = true;
    if (head == "bracket" || head == "left" || head == "right") {
      if (tokens.size() < 5 || tokens[3] != "=")
        fail(line_no, "expected: " + head + " <a> <b> = <value>");
      Entry e{lookup(tokens[1], line_no), lookup(tokens[2], line_no),
              parse_value(tokens, 4, index, line_no), line_no};
      (head == "bracket" ? bracket_entries : head == "left" ? left_entries : right_entries)
          .push_back(std::move(e));
    } else if (head == "unit") {
      if (tokens.size() < 3 || tokens[1] != "=") fail(line_no, "expected: unit = <value>");
      if (unit.has_value()) fail(line_no, "duplicate 'unit' line");
      unit = parse_value(tokens, 2, index, line_no);
    } else if (head == "form") {
      if (tokens.size() != 5 || tokens[3] != "=")
        fail(line_no, "expected: form <a> <b> = <rational>");
      Rational c;
      try {
        c = parse_rational(tokens[4]);
      } catch (const std::exception&) {
        fail(line_no, "bad coefficient '" + tokens[4] + "'");
      }
      form_entries.emplace_back(lookup(tokens[1], line_no), lookup(tokens[2], line_no), c);
      saw_form = true;
    } else {
      fail(line_no, "unknown directive '" + head + "'");
    }
  }

  if (!is_dialgebra.has_value()) throw std::invalid_argument("missing 'kind' line");
  if (names.empty()) throw std::invalid_argument("no 'basis' lines");

  AlgebraFile file;
  file.is_dialgebra = *is_dialgebra;
  file.basis = GradedBasis::make(names);
  const std::uint32_t n = file.basis.dim();

  auto fill = [n](std::vector<Entry>& entries, const char* what) {
    Table t(n, n);
    std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
    for (auto& e : entries) {
      std::size_t key = static_cast<std::size_t>(e.a) * n + e.b;
      if (seen[key])
        fail(e.line_no, std::string("duplicate '") + what + "' entry for this pair");
      seen[key] = true;
      t.set(e.a, e.b, std::move(e.value));
    }
    return t;
  };

  if (file.is_dialgebra) {
    if (!bracket_entries.empty())
      fail(bracket_entries.front().line_no, "'bracket' is not valid with kind dialgebra");
    if (saw_form)
      throw std::invalid_argument("'form' is not valid with kind dialgebra");
    file.left = fill(left_entries, "left");
    file.right = fill(right_entries, "right");
    file.unit = std::move(unit);
  } else {
    if (!left_entries.empty() || !right_entries.empty() || unit.has_value())
      throw std::invalid_argument("'left'/'right'/'unit' are not valid with kind leibniz");
    file.bracket = fill(bracket_entries, "bracket");
    if (saw_form) {
      BilinearForm form(n);
      std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
      for (const auto& [a, b, c] : form_entries) {
        std::size_t key = static_cast<std::size_t>(a) * n + b;
        if (seen[key]) throw std::invalid_argument("duplicate 'form' entry");
        seen[key] = true;
        form.gram[key] = c;
      }
      file.form = std::move(form);
    }
  }
  return file;
}

AlgebraFile load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return parse_algebra(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

namespace {

void append_products(std::string& out, const char* head, const Table& t,
                     const GradedBasis& basis) {
  for (std::uint32_t a = 0; a < basis.dim(); ++a)
    for (std::uint32_t b = 0; b < basis.dim(); ++b) {
      const SparseVec& v = t.at(a, b);
      if (v.is_zero()) continue;
      out += head;
      out += ' ';
      out += basis.names[a];
      out += ' ';
      out += basis.names[b];
      out += " = ";
      out += format_value(v, basis);
      out += '\n';
    }
}

std::string serialize_basis(const GradedBasis& basis, const char* kind) {
  std::string out = std::string("kind ") + kind + '\n';
  for (std::uint32_t i = 0; i < basis.dim(); ++i) {
    out += "basis ";
    out += basis.names[i];
    out += basis.parity[i] == Parity::odd ? " 1\n" : " 0\n";
  }
  return out;
}

}  // namespace

std::string serialize(const LeibnizSuperalgebra& l, const BilinearForm* form) {
  std::string out = serialize_basis(l.basis, "leibniz");
  append_products(out, "bracket", l.bracket, l.basis);
  if (form != nullptr) {
    for (std::uint32_t a = 0; a < l.dim(); ++a)
      for (std::uint32_t b = 0; b < l.dim(); ++b) {
        const Rational& c = form->at(a, b);
        if (c == 0) continue;
        out += "form ";
        out += l.basis.names[a];
        out += ' ';
        out += l.basis.names[b];
        out += " = ";
        out += format_rational(c);
        out += '\n';
      }
  }
  return out;
}

std::string serialize(const SuperDialgebra& d) {
  std::string out = serialize_basis(d.basis, "dialgebra");
  append_products(out, "left", d.left, d.basis);
  append_products(out, "right", d.right, d.basis);
  if (d.bar_unit.has_value()) {
    out += "unit = ";
    out += format_value(*d.bar_unit, d.basis);
    out += '\n';
  }
  return out;
}

}  // namespace lsa
