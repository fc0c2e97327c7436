#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "posetlab/containment.hpp"
#include "posetlab/embedding.hpp"
#include "posetlab/graph_metrics.hpp"
#include "posetlab/poset.hpp"
#include "posetlab/witness_paths.hpp"

// JSON interchange. Every reader throws ParseError on malformed documents
// and passes library errors (UnknownElement, CycleDetected, ...) through.
namespace posetlab::io {

std::string read_text(const std::filesystem::path& file);
void write_text(const std::filesystem::path& file, const std::string& text);

/// {"elements": [...], "cover": [["x", "y"], ...]}, y covers x.
Poset parse_poset(const std::string& text);
std::string poset_to_json(const Poset& p);
Poset read_poset(const std::filesystem::path& file);

/// Same format with orientation ignored.
metrics::Graph parse_graph(const std::string& text);

/// {"rotation": {"v": [["u", "up"|"down"], ...]}, "outer_face": [...],
///  "e_infinity": "x0"}. The e_inf slot is written as ["e_inf", "inf"] in the
/// rotation of x0. "outer_face" is optional on input and checked when given.
PlaneEmbedding parse_embedding(const Poset& p, const std::string& text);
std::string embedding_to_json(const PlaneEmbedding& emb);

/// {"dimension": d, "extensions": [[...], ...]}.
std::string realizer_to_json(const Poset& p, const Realizer& r);
Realizer parse_realizer(const Poset& p, const std::string& text);

/// {"order": d, "pairs": [["a", "b"], ...]}.
std::string standard_example_to_json(const Poset& p, const StandardExampleWitness& w);

/// {"family": ..., "order": d, "map": {"pattern element": "host element"}}.
std::string family_witness_to_json(const Poset& host, const Poset& pattern, const std::string& family, int order,
                                   const SubposetMap& map);

/// {"x": .., "y": .., "W": [...], "W_prime": [...], "a": [...], "b": [...]}.
IntervalCertificate parse_certificate(const Poset& p, const std::string& text);
std::string certificate_to_json(const Poset& p, const IntervalCertificate& cert);
std::string certificate_report_to_json(const CertificateReport& report);

std::string tree_decomposition_to_json(const metrics::Graph& g, const metrics::TreewidthResult& tw);

}  // namespace posetlab::io
