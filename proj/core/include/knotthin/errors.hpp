#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace knotthin {

// Common base so callers can catch toolkit failures separately from std ones
// and still see the machine-readable kind tag.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct MalformedCode : Error {
    explicit MalformedCode(const std::string& m) : Error("MalformedCode", m) {}
};

struct Disconnected : Error {
    explicit Disconnected(const std::string& m) : Error("Disconnected", m) {}
};

struct NonPlanarEmbedding : Error {
    explicit NonPlanarEmbedding(const std::string& m) : Error("NonPlanarEmbedding", m) {}
};

struct AmbiguousMarking : Error {
    explicit AmbiguousMarking(const std::string& m) : Error("AmbiguousMarking", m) {}
};

struct NoBadEdge : Error {
    explicit NoBadEdge(const std::string& m) : Error("NoBadEdge", m) {}
};

// Raised before enumeration would blow the configured state budget; carries
// the matrix-tree count (decimal) so callers can still report it.
struct EnumerationBudgetExceeded : Error {
    EnumerationBudgetExceeded(const std::string& count, const std::string& budget)
        : Error("EnumerationBudgetExceeded",
                "state count " + count + " exceeds budget " + budget),
          count(count) {}
    std::string count;
};

struct NotAKnot : Error {
    explicit NotAKnot(int components, const std::string& m = "")
        : Error("NotAKnot",
                m.empty() ? std::to_string(components) + " components" : m),
          components(components) {}
    int components;
};

// Hard failure: the B <= 4 assertion after Montesinos normalization did not
// hold, which means a twist-convention drift somewhere upstream.
struct NormalizationBug : Error {
    explicit NormalizationBug(const std::string& m) : Error("NormalizationBug", m) {}
};

struct InvalidTable : Error {
    explicit InvalidTable(const std::string& m) : Error("InvalidTable", m) {}
};

}  // namespace knotthin
