#pragma once

#include <string>
#include <vector>

#include "degseq/bounds.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/weights.hpp"

namespace degseq {

// Parses a comma- or whitespace-separated list of base-10 integers.
// Throws Errc::parse on empty input or stray characters.
std::vector<int> parse_int_list(const std::string& text);

// Reads a degree sequence from a text file: integers separated by commas,
// spaces, or newlines; lines starting with '#' are skipped. The resulting
// entries are validated by the DegreeSequence constructor.
DegreeSequence read_degree_file(const std::string& path);

// Offspring laws and weight sequences travel as JSON:
//
//   {
//     "schema": "degseq.weights.v1",
//     "weights": {"0": 0.6667, "3": 0.3333},
//     "horizon": 50,        // with tail_mass: family truncated at this degree
//     "tail_mass": 0.0012,  // mass beyond the horizon in the untruncated law
//     "radius": 1.0         // optional declared radius of convergence
//   }
//
// Degrees absent from the map carry weight zero. horizon and tail_mass are
// required together; they extend the support to [0, horizon] even when the
// map's largest key is smaller.
WeightSequence parse_weights_json(const std::string& text);
WeightSequence read_weights_json(const std::string& path);
std::string weights_to_json(const WeightSequence& w);

// Tail-experiment reports. Every header carries the seed; the timestamp is
// the caller's to supply and is the only field allowed to differ between
// identical runs. `verdict` may be null when no ceiling was checked; its
// point count must otherwise match the grid.
//
// CSV columns, in order: x, estimate, upper_ci, bound, holds.
std::string tail_report_csv(const EmpiricalTail& tail, const BoundVerdict* verdict,
                            const std::string& timestamp);
std::string tail_report_json(const EmpiricalTail& tail, const BoundVerdict* verdict,
                             const std::string& timestamp);

}  // namespace degseq
