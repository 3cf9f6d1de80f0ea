#include "condrisk/prob.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace condrisk {

ProbSpace::ProbSpace(std::vector<std::string> atom_ids, std::vector<double> probs)
    : atom_ids_(std::move(atom_ids)), probs_(std::move(probs)) {
    if (probs_.empty())
        throw Error(Errc::BadParameter, "a probability space needs at least one atom");
    if (atom_ids_.size() != probs_.size())
        throw Error(Errc::BadParameter, "atom id / probability count mismatch");
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        if (!(probs_[i] > 0.0) || !std::isfinite(probs_[i]))
            throw Error(Errc::ZeroProbabilityAtom,
                        "atom '" + atom_ids_[i] + "' has probability <= 0",
                        static_cast<int>(i));
    }
    double sum = std::accumulate(probs_.begin(), probs_.end(), 0.0);
    if (std::abs(sum - 1.0) > kProbSumTol)
        throw Error(Errc::ProbSum,
                    "probabilities sum to " + std::to_string(sum) + ", not 1");
    std::unordered_set<std::string> seen;
    for (const auto& id : atom_ids_)
        if (!seen.insert(id).second)
            throw Error(Errc::DuplicateLabel, "duplicate atom id '" + id + "'");
}

int ProbSpace::index_of(const std::string& atom_id) const {
    for (int i = 0; i < size(); ++i)
        if (atom_ids_[i] == atom_id) return i;
    return -1;
}

SpacePtr build_space(const std::vector<std::pair<std::string, double>>& atom_probs) {
    std::vector<std::string> ids;
    std::vector<double> probs;
    ids.reserve(atom_probs.size());
    probs.reserve(atom_probs.size());
    for (const auto& [id, p] : atom_probs) {
        ids.push_back(id);
        probs.push_back(p);
    }
    return std::make_shared<ProbSpace>(std::move(ids), std::move(probs));
}

SpacePtr uniform_space(int n_atoms) {
    std::vector<std::pair<std::string, double>> ap;
    for (int i = 0; i < n_atoms; ++i)
        ap.emplace_back("w" + std::to_string(i), 1.0 / n_atoms);
    // renormalize so the sum is exactly representable
    double sum = 0.0;
    for (auto& [id, p] : ap) sum += p;
    ap.back().second += 1.0 - sum;
    return build_space(ap);
}

SubAlgebra::SubAlgebra(SpacePtr space, std::vector<std::vector<int>> blocks)
    : space_(std::move(space)), blocks_(std::move(blocks)) {
    const int n = space_->size();
    block_of_.assign(n, -1);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].empty())
            throw Error(Errc::EmptyBlock, "block " + std::to_string(b) + " is empty",
                        static_cast<int>(b));
        for (int atom : blocks_[b]) {
            if (atom < 0 || atom >= n)
                throw Error(Errc::NotAPartition,
                            "block " + std::to_string(b) + " references unknown atom");
            if (block_of_[atom] != -1)
                throw Error(Errc::NotAPartition,
                            "atom '" + space_->atom_id(atom) + "' appears in two blocks");
            block_of_[atom] = static_cast<int>(b);
        }
    }
    for (int atom = 0; atom < n; ++atom)
        if (block_of_[atom] == -1)
            throw Error(Errc::NotAPartition,
                        "atom '" + space_->atom_id(atom) + "' is covered by no block");
    block_probs_.resize(blocks_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        double p = 0.0;
        for (int atom : blocks_[b]) p += space_->prob(atom);
        block_probs_[b] = p;
    }
}

SubAlgebra build_subalgebra(const SpacePtr& space,
                            const std::vector<std::vector<int>>& blocks) {
    return SubAlgebra(space, blocks);
}

SubAlgebra build_subalgebra_by_id(const SpacePtr& space,
                                  const std::vector<std::vector<std::string>>& blocks) {
    std::vector<std::vector<int>> idx(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (const auto& id : blocks[b]) {
            int i = space->index_of(id);
            if (i < 0)
                throw Error(Errc::NotAPartition, "unknown atom id '" + id + "'");
            idx[b].push_back(i);
        }
    }
    return SubAlgebra(space, idx);
}

SubAlgebra finest_algebra(const SpacePtr& space) {
    std::vector<std::vector<int>> blocks(space->size());
    for (int i = 0; i < space->size(); ++i) blocks[i] = {i};
    return SubAlgebra(space, blocks);
}

SubAlgebra trivial_algebra(const SpacePtr& space) {
    std::vector<int> all(space->size());
    for (int i = 0; i < space->size(); ++i) all[i] = i;
    return SubAlgebra(space, {all});
}

bool is_coarser(const SubAlgebra& f, const SubAlgebra& g) {
    if (!same_space(f.space(), g.space()))
        throw Error(Errc::SpaceMismatch, "is_coarser over different spaces");
    for (const auto& gb : g.blocks()) {
        int host = f.block_of(gb.front());
        for (int atom : gb)
            if (f.block_of(atom) != host) return false;
    }
    return true;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* op) {
    if (!same_space(a, b))
        throw Error(Errc::SpaceMismatch, std::string(op) + " over different spaces");
}

} // namespace condrisk
