// Writes the small-instance corpus as JSON lines, one model per line together
// with its generator parameters and brute-force maximum cut.
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "muig/gen.hpp"
#include "muig/io.hpp"
#include "muig/maxcut.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_corpus <out.jsonl>\n";
        return 1;
    }
    std::ofstream out(argv[1]);
    if (!out) {
        std::cerr << "cannot write " << argv[1] << "\n";
        return 1;
    }
    for (std::size_t i = 0; i < muig::kCorpusSize; ++i) {
        const muig::GenParams p = muig::corpus_params(i);
        const muig::UBubbleModel model = muig::random_model(p);
        nlohmann::json line = {
            {"index", i},
            {"params",
             {{"n", p.n},
              {"seed", p.seed},
              {"grid", p.grid},
              {"window", p.window},
              {"kinds", p.kind_weights},
              {"twin_rate", p.twin_rate}}},
            {"maxcut", muig::maxcut_bruteforce(muig::graph_of_model(model))},
            {"model", muig::model_to_json(model)},
        };
        out << line.dump() << "\n";
    }
    return 0;
}
