#ifndef ASSUR_CORPUS_HPP
#define ASSUR_CORPUS_HPP

#include <json.hpp>

#include "assur/pinned_graph.hpp"

namespace assur {

struct CorpusInstance {
  std::string name;
  std::string description;
  PinnedGraph graph;
  nlohmann::json expected;  // sidecar verdicts, frozen from the exact oracles
};

const std::vector<std::string>& corpus_names();
CorpusInstance corpus_instance(const std::string& name);
std::vector<CorpusInstance> corpus_all();

}  // namespace assur

#endif
