#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "seqlab/natural.hpp"

namespace seqlab {

// Malformed b-file content. line() is 1-based.
class BFileError : public DomainError {
 public:
  BFileError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// "<index> <value>\n" per term, indices 1, 2, 3, ...
void write_bfile(std::ostream& out, const std::vector<Natural>& seq);
void write_bfile(const std::string& path, const std::vector<Natural>& seq);

std::vector<Natural> read_bfile(std::istream& in);
std::vector<Natural> read_bfile(const std::string& path);

// One b-file line, e.g. "3 44" -> {3, 44}. Rejects padding and stray spaces.
std::pair<std::size_t, Natural> parse_bfile_line(const std::string& line, std::size_t line_no = 1);

}  // namespace seqlab
