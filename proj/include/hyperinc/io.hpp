#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hyperinc/error.hpp"
#include "hyperinc/hypergraph.hpp"
#include "hyperinc/kernel.hpp"
#include "hyperinc/spectra.hpp"

namespace hyperinc {

using Json = nlohmann::ordered_json;

/// ParseError with a 1-based position in the input.
class ParseFailure : public Error {
   public:
    ParseFailure(std::size_t line, std::size_t column, const std::string& what)
        : Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

// Text form:
//   # comment
//   vertices: 1 2 3 12      (optional, adds isolated vertices)
//   e1: 1 2 3
// JSON form: {"vertices": [...], "edges": {"e1": [...], ...}}; numbers are
// accepted as labels.
Hypergraph parse_hypergraph_text(std::string_view text);
Hypergraph parse_hypergraph_json(std::string_view text);
/// JSON when the first non-blank character is '{', text otherwise.
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph_file(const std::string& path);

/// Canonical forms: vertex header first, then edges in stored order.
std::string to_text(const Hypergraph& h);
Json to_json(const Hypergraph& h);

std::string read_file(const std::string& path);

/// {"e1": "1/2", ...} or lines `e1: 1/2`. BadWeightFile for anything that is
/// not a positive rational.
std::map<std::string, Rational> parse_weights(std::string_view text);

Json to_json(const VertexVector& x, const LabelList& order);
Json to_json(const CyclotomicVector& x, const LabelList& order);

/// {"kind", "sets": {name: labels}, ...}. "sets" may also be a plain array in
/// builder order. Extra keys: "ratio" (ratio kinds and ThreeSetRelation),
/// "coefficients" (GeneralCombination), "order"/"power" (RootOfUnityCycle).
KernelCertificate certificate_from_json(const Hypergraph& h, const Json& j);
Json to_json(const Hypergraph& h, const KernelCertificate& c, const std::optional<VerificationResult>& result = {});

Json to_json(const PredictedEigenpair& p);
Json to_json(const EigenvalueBound& b);
Json to_json(const NullityReport& r);
Json to_json(const Partition& p);
Json to_json(const RationalMatrix& m);

}  // namespace hyperinc
