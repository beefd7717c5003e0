#include "mvmlab/algebra_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace mvmlab {

namespace {

struct Word {
  std::string text;
  std::size_t line;
  std::size_t column;
};

[[noreturn]] void fail(const Word& w, const std::string& msg) {
  throw ParseError("line " + std::to_string(w.line) + ", column " +
                   std::to_string(w.column) + ": " + msg);
}

std::size_t to_number(const Word& w, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] =
      std::from_chars(w.text.data(), w.text.data() + w.text.size(), v);
  if (ec != std::errc() || ptr != w.text.data() + w.text.size()) {
    fail(w, std::string("expected ") + what + ", got '" + w.text + "'");
  }
  return v;
}

}  // namespace

FiniteAlgebra parse_algebra(std::string_view text) {
  std::vector<std::string> notes;
  std::vector<Word> words;
  bool header_seen = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::size_t hash = line.find('#');
    std::string_view body = line.substr(0, hash);
    bool blank = body.find_first_not_of(" \t\r") == std::string_view::npos;
    if (!header_seen && blank && hash != std::string_view::npos) {
      notes.emplace_back(line.substr(hash + 1));
    }
    std::size_t i = 0;
    while (i < body.size()) {
      if (body[i] == ' ' || body[i] == '\t' || body[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < body.size() && body[j] != ' ' && body[j] != '\t' &&
             body[j] != '\r') {
        ++j;
      }
      words.push_back({std::string(body.substr(i, j - i)), line_no, i + 1});
      header_seen = true;
      i = j;
    }
    if (end == text.size()) break;
    start = end + 1;
  }

  std::size_t pos = 0;
  auto next = [&](const char* what) -> const Word& {
    if (pos >= words.size()) {
      throw ParseError(std::string("unexpected end of input, expected ") + what);
    }
    return words[pos++];
  };
  auto keyword = [&](const char* kw) {
    const Word& w = next(kw);
    if (w.text != kw) fail(w, std::string("expected '") + kw + "'");
  };

  keyword("algebra");
  std::string name = next("algebra name").text;
  keyword("size");
  const Word& size_word = next("size");
  std::size_t n = to_number(size_word, "carrier size");
  if (n == 0) fail(size_word, "carrier size must be positive");
  FiniteAlgebra algebra(name, n);
  for (auto& note : notes) algebra.add_note(std::move(note));

  while (pos < words.size()) {
    const Word& kw = next("op or const");
    if (kw.text == "op") {
      const Word& op_name = next("operation name");
      keyword("arity");
      std::size_t arity = to_number(next("arity"), "arity");
      std::size_t count = table_size(n, arity);
      std::vector<Element> table;
      table.reserve(count);
      for (std::size_t k = 0; k < count; ++k) {
        if (pos >= words.size() || words[pos].text == "op" ||
            words[pos].text == "const") {
          fail(op_name, "incomplete table for '" + op_name.text + "': " +
                            std::to_string(k) + " of " +
                            std::to_string(count) + " entries");
        }
        const Word& entry = next("table entry");
        std::size_t v = to_number(entry, "table entry");
        if (v >= n) {
          fail(entry, "table entry " + std::to_string(v) +
                          " out of range for size " + std::to_string(n) +
                          " (entry " + std::to_string(k) + " of '" +
                          op_name.text + "')");
        }
        table.push_back(static_cast<Element>(v));
      }
      try {
        algebra.add_operation(op_name.text, arity, std::move(table));
      } catch (const AlgebraError& e) {
        fail(op_name, e.what());
      }
    } else if (kw.text == "const") {
      const Word& c_name = next("constant name");
      const Word& value = next("constant value");
      std::size_t v = to_number(value, "constant value");
      if (v >= n) fail(value, "constant out of range");
      try {
        algebra.add_constant(c_name.text, static_cast<Element>(v));
      } catch (const AlgebraError& e) {
        fail(c_name, e.what());
      }
    } else {
      fail(kw, "expected 'op' or 'const', got '" + kw.text + "'");
    }
  }
  return algebra;
}

std::string serialize_algebra(const FiniteAlgebra& algebra) {
  std::ostringstream out;
  for (const std::string& note : algebra.notes()) out << '#' << note << '\n';
  out << "algebra " << algebra.name() << " size " << algebra.size() << '\n';
  const std::size_t n = algebra.size();
  for (const Operation& op : algebra.operations()) {
    out << "op " << op.name << " arity " << op.arity << '\n';
    const std::size_t row = op.arity == 0 ? 1 : n;
    for (std::size_t i = 0; i < op.table.size(); ++i) {
      out << op.table[i] << ((i + 1) % row == 0 ? '\n' : ' ');
    }
  }
  for (const Constant& c : algebra.constants()) {
    out << "const " << c.name << ' ' << c.value << '\n';
  }
  return out.str();
}

FiniteAlgebra load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_algebra(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const AlgebraError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_algebra(const FiniteAlgebra& algebra,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path.string() + ": cannot write file");
  out << serialize_algebra(algebra);
}

}  // namespace mvmlab
