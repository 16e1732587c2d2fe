#include "stringgrass/quiver.hpp"

#include <set>
#include <sstream>
#include <utility>

namespace stringgrass {

Quiver::Quiver(std::vector<int> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
    if (!index_.emplace(vertices_[i], i).second) {
      fail(Errc::DuplicateEntry, "duplicate vertex id " + std::to_string(vertices_[i]));
    }
  }
  for (int i = 0; i < static_cast<int>(arrows_.size()); ++i) {
    const Arrow& a = arrows_[i];
    if (!has_vertex(a.source) || !has_vertex(a.target)) {
      fail(Errc::IndexOutOfRange, "arrow '" + a.label + "' references an undeclared vertex");
    }
    if (!by_label_.emplace(a.label, i).second) {
      fail(Errc::DuplicateEntry, "duplicate arrow label '" + a.label + "'");
    }
  }
}

int Quiver::vertex_index(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    fail(Errc::IndexOutOfRange, "unknown vertex id " + std::to_string(id));
  }
  return it->second;
}

const Arrow& Quiver::arrow(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) {
    fail(Errc::IndexOutOfRange, "unknown arrow label '" + label + "'");
  }
  return arrows_[it->second];
}

DimensionVector::DimensionVector(std::vector<long> entries) : entries_(std::move(entries)) {
  for (long v : entries_) {
    if (v < 0) fail(Errc::InvalidParameter, "negative dimension entry");
  }
}

DimensionVector DimensionVector::zeros(int n) {
  return DimensionVector(std::vector<long>(static_cast<std::size_t>(n), 0));
}

long DimensionVector::sum() const {
  long s = 0;
  for (long v : entries_) s += v;
  return s;
}

bool DimensionVector::is_zero() const { return sum() == 0; }

bool DimensionVector::leq(const DimensionVector& other) const {
  if (size() != other.size()) return false;
  for (int i = 0; i < size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

std::string DimensionVector::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    if (i) out << ',';
    out << entries_[i];
  }
  return out.str();
}

DimensionVector DimensionVector::parse(const std::string& text) {
  std::vector<long> entries;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string token =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    // Digits only: rejects signs, whitespace and empty tokens.
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      fail(Errc::ParseError, "bad dimension vector entry '" + token + "'");
    }
    try {
      entries.push_back(std::stol(token));
    } catch (const std::exception&) {
      fail(Errc::ParseError, "dimension vector entry out of range '" + token + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return DimensionVector(std::move(entries));
}

std::optional<ValidationIssue> validate_representation(const Representation& rep) {
  if (rep.dims.size() != rep.quiver.vertex_count()) {
    return ValidationIssue{Errc::DimensionMismatch,
                           "dims has " + std::to_string(rep.dims.size()) + " entries for " +
                               std::to_string(rep.quiver.vertex_count()) + " vertices"};
  }
  for (const auto& [label, entries] : rep.matrices) {
    if (!rep.quiver.has_arrow(label)) {
      return ValidationIssue{Errc::IndexOutOfRange,
                             "matrix for undeclared arrow '" + label + "'"};
    }
    const Arrow& a = rep.quiver.arrow(label);
    long rows = rep.dim_of_id(a.target);
    long cols = rep.dim_of_id(a.source);
    std::set<std::pair<int, int>> seen;
    for (const MatrixEntry& entry : entries) {
      if (entry.row < 1 || entry.row > rows || entry.col < 1 || entry.col > cols) {
        return ValidationIssue{
            Errc::IndexOutOfRange,
            "arrow '" + label + "' entry (" + std::to_string(entry.row) + "," +
                std::to_string(entry.col) + ") outside " + std::to_string(rows) + "x" +
                std::to_string(cols)};
      }
      if (!seen.emplace(entry.row, entry.col).second) {
        return ValidationIssue{Errc::DuplicateEntry,
                               "arrow '" + label + "' repeats entry (" +
                                   std::to_string(entry.row) + "," +
                                   std::to_string(entry.col) + ")"};
      }
      if (entry.value == 0) {
        return ValidationIssue{Errc::ZeroStoredValue,
                               "arrow '" + label + "' stores an explicit zero at (" +
                                   std::to_string(entry.row) + "," +
                                   std::to_string(entry.col) + ")"};
      }
    }
  }
  return std::nullopt;
}

void require_valid(const Representation& rep) {
  if (auto issue = validate_representation(rep)) {
    fail(issue->code, issue->detail);
  }
}

}  // namespace stringgrass
