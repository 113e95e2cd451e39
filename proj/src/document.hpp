#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrangement.hpp"
#include "graph.hpp"
#include "witness.hpp"

namespace hudg {

// Malformed or schema-violating document text.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int document_version = 1;

// Tagged union of the four persistable payloads.  `kind` selects which
// member is meaningful; the others stay default-constructed.
struct Document {
    std::string kind;  // "arrangement" | "description" | "graph" | "realization"
    std::map<std::string, std::string> meta;  // seed / provenance strings

    std::vector<OrientedLine> lines;       // arrangement
    CombinatorialDescription description;  // description
    LabeledGraph graph;                    // graph
    Realization realization;              // realization
};

Document arrangement_document(std::vector<OrientedLine> lines,
                              std::map<std::string, std::string> meta = {});
Document description_document(CombinatorialDescription d,
                              std::map<std::string, std::string> meta = {});
Document graph_document(LabeledGraph g, std::map<std::string, std::string> meta = {});
Document realization_document(Realization r, std::map<std::string, std::string> meta = {});

// Serialization is canonical: fixed key order, numbers as shortest decimal
// that round-trips the exact double.
std::string document_to_json(const Document& doc);

// Parses and validates against the payload's own invariants (label syntax,
// edge bookkeeping, geometry tags, point arity).  Throws ParseError on
// malformed text or schema violations.
Document document_from_json(const std::string& text);

// File convenience wrappers; IO failures surface as ParseError.
void save_document(const Document& doc, const std::string& path);
Document load_document(const std::string& path);

}  // namespace hudg
