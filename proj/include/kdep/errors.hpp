#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kdep {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed edge-list input: bad header, bad line, id out of range,
// duplicate edge, self-loop.
struct ParseError : Error {
  using Error::Error;
};

// The input graph contains an odd cycle. `odd_cycle` is one witness: a
// vertex sequence whose consecutive members are adjacent and whose last
// member is adjacent to the first; its length is odd.
struct NotBipartiteError : Error {
  std::vector<int> odd_cycle;
  NotBipartiteError(const std::string& msg, std::vector<int> cycle)
      : Error(msg), odd_cycle(std::move(cycle)) {}
};

// remove_edges was asked to delete an edge the graph does not have.
struct EdgeNotPresentError : Error {
  using Error::Error;
};

// konig_cover detected that its matching argument is not maximum
// (an augmenting path exists).
struct NotMaximumMatchingError : Error {
  using Error::Error;
};

// A matching provider yielded something that is not a maximum matching
// of the residual graph it was asked about.
struct InvalidProviderError : Error {
  using Error::Error;
};

// k outside the operation's admissible range.
struct InvalidKError : Error {
  using Error::Error;
};

// The scripted worst-case matchings failed validation; indicates a
// transcription bug in the construction, never expected at runtime.
struct ConstructionFailureError : Error {
  using Error::Error;
};

// A tightness demonstration assertion failed; message carries the trace
// summary.
struct TightnessViolationError : Error {
  using Error::Error;
};

// Instance exceeds the brute-force size threshold.
struct TooLargeError : Error {
  using Error::Error;
};

// The set handed to check_missed_edges_bound as an optimum is not even feasible.
struct NotOptimalError : Error {
  using Error::Error;
};

// ke_experiment requires a Konig-Egervary input graph.
struct NotKEError : Error {
  using Error::Error;
};

}  // namespace kdep
