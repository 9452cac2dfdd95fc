#pragma once

// Summaries and file formats for classification output.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fano/growth.hpp"
#include "fano/polytope.hpp"
#include "fano/reference_data.hpp"

namespace fano {

struct HistogramRow {
  std::size_t total{0};
  std::size_t simplicial{0};
  std::size_t smooth{0};
  std::size_t minimal{0};
  std::size_t maximal{0};
};

struct ClassificationReport {
  std::map<std::size_t, HistogramRow> by_vertices;
  std::size_t total{0};
  std::size_t simplicial{0};
  std::size_t smooth{0};
  std::size_t non_simplicial{0};
  std::size_t minimal{0};
  std::size_t maximal{0};
  std::vector<WeightSystem> weights;
  Int h_bound{0};
};

ClassificationReport summarize(const std::vector<ClassificationRecord>& records,
                               std::vector<WeightSystem> weights = {}, Int h_bound = 0);

/// One histogram column per vertex count 4..14.
reference::CountRow count_row(const ClassificationReport& r, std::size_t HistogramRow::*field);

/// Polytopes / Simplicial / Minimal / Maximal rows, columns 4..14.
std::string format_stats(const ClassificationReport& r);

enum class OutputFormat { json, tsv, text };

/// Array of {id, vertices, simplicial, smooth, minimal, maximal, picard?,
/// parents, children}; picard is omitted for non-simplicial records.
nlohmann::ordered_json to_json(const std::vector<ClassificationRecord>& records);

/// Rebuilds records from to_json output. Polytopes are recomputed from the
/// vertex lists; flags and edges are taken from the file. Throws
/// std::invalid_argument on malformed input.
std::vector<ClassificationRecord> from_json(const nlohmann::ordered_json& j);

/// The exact text written by `classify`; ends in a newline.
std::string serialize(const std::vector<ClassificationRecord>& records, OutputFormat format);

std::string to_tsv(const std::vector<ClassificationRecord>& records);
std::string to_text(const std::vector<ClassificationRecord>& records);

/// Re-derives every flag of every record from its vertices and checks the
/// edge lists are mutually consistent. Returns one message per problem.
std::vector<std::string> recheck_records(const std::vector<ClassificationRecord>& records);

}  // namespace fano
