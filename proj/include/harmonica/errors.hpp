#pragma once

#include <stdexcept>
#include <string>

namespace harmonica {

// A lookup past the end of a HarmonicTable. Tables never grow on demand;
// callers size them up front.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Formula id not present in the registry.
class unknown_formula_error : public std::runtime_error {
public:
    explicit unknown_formula_error(const std::string& id)
        : std::runtime_error("unknown formula id: " + id), id_(id) {}
    const std::string& id() const { return id_; }

private:
    std::string id_;
};

// (n, m) outside a formula's declared domain, or a parameter outside a
// theorem's hypothesis.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace harmonica
