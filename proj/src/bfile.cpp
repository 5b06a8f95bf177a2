#include "seqlab/bfile.hpp"

#include <fstream>

namespace seqlab {

BFileError::BFileError(std::size_t line, const std::string& what)
    : DomainError("b-file line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool plain_decimal(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return s.size() == 1 || s[0] != '0';
}

}  // namespace

void write_bfile(std::ostream& out, const std::vector<Natural>& seq) {
  if (seq.empty()) throw DomainError("b-file needs at least one term");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0) throw DomainError("b-file values must be non-negative");
    out << (i + 1) << ' ' << seq[i].get_str() << '\n';
  }
  if (!out) throw std::runtime_error("b-file write failed");
}

void write_bfile(const std::string& path, const std::vector<Natural>& seq) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_bfile(out, seq);
}

std::pair<std::size_t, Natural> parse_bfile_line(const std::string& line, std::size_t line_no) {
  const auto space = line.find(' ');
  if (space == std::string::npos) throw BFileError(line_no, "expected \"index value\"");
  const std::string idx = line.substr(0, space), val = line.substr(space + 1);
  if (!plain_decimal(idx)) throw BFileError(line_no, "bad index \"" + idx + "\"");
  if (!plain_decimal(val)) throw BFileError(line_no, "bad value \"" + val + "\"");
  if (idx.size() > 18) throw BFileError(line_no, "index too large");
  return {std::stoull(idx), Natural(val)};
}

std::vector<Natural> read_bfile(std::istream& in) {
  std::vector<Natural> out;
  std::string line;
  std::size_t line_no = 0;
  bool last_terminated = true;
  while (std::getline(in, line)) {
    ++line_no;
    last_terminated = !in.eof();
    auto [index, value] = parse_bfile_line(line, line_no);
    if (index != out.size() + 1) {
      throw BFileError(line_no, "expected index " + std::to_string(out.size() + 1) + ", got " + std::to_string(index));
    }
    out.push_back(std::move(value));
  }
  if (out.empty()) throw BFileError(1, "empty b-file");
  if (!last_terminated) throw BFileError(line_no, "final line is not newline-terminated");
  return out;
}

std::vector<Natural> read_bfile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_bfile(in);
}

}  // namespace seqlab
