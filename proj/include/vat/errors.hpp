#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vat {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid parameters (bad family name, negative sizes, malformed flags).
class param_error : public error {
public:
    explicit param_error(const std::string& what) : error(what) {}
};

// A configured search budget (node count, edge count, order cap) was hit.
// Distinct from a negative answer: the question is left undecided.
class budget_error : public error {
public:
    explicit budget_error(const std::string& what) : error(what) {}
};

// Malformed serialized input. `offset` is the byte position of the
// first offending byte.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Input outside an operation's mathematical domain.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// Bipartite-only operation applied to a non-bipartite graph.
// Carries an odd cycle as the witness.
class non_bipartite_error : public domain_error {
public:
    non_bipartite_error(const std::string& what, std::vector<int> odd_cycle)
        : domain_error(what), odd_cycle_(std::move(odd_cycle)) {}
    const std::vector<int>& odd_cycle() const { return odd_cycle_; }

private:
    std::vector<int> odd_cycle_;
};

} // namespace vat
