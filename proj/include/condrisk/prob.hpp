#ifndef CONDRISK_PROB_HPP
#define CONDRISK_PROB_HPP

#include <memory>
#include <string>
#include <vector>

#include "condrisk/errors.hpp"

namespace condrisk {

/// Finite probability space: ordered atoms with strictly positive weights
/// summing to one. Immutable after construction; share via SpacePtr.
class ProbSpace {
public:
    static constexpr double kProbSumTol = 1e-12;

    ProbSpace(std::vector<std::string> atom_ids, std::vector<double> probs);

    int size() const { return static_cast<int>(probs_.size()); }
    const std::vector<std::string>& atom_ids() const { return atom_ids_; }
    const std::vector<double>& probs() const { return probs_; }
    double prob(int atom) const { return probs_[atom]; }
    const std::string& atom_id(int atom) const { return atom_ids_[atom]; }

    // -1 when the label is unknown.
    int index_of(const std::string& atom_id) const;

private:
    std::vector<std::string> atom_ids_;
    std::vector<double> probs_;
};

using SpacePtr = std::shared_ptr<const ProbSpace>;

SpacePtr build_space(const std::vector<std::pair<std::string, double>>& atom_probs);
SpacePtr uniform_space(int n_atoms);

/// A sigma-subalgebra of the discrete algebra, represented by its partition
/// into blocks. Doubles as the partition object used by concatenation.
class SubAlgebra {
public:
    SubAlgebra(SpacePtr space, std::vector<std::vector<int>> blocks);

    const SpacePtr& space() const { return space_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int b) const { return blocks_[b]; }
    int block_of(int atom) const { return block_of_[atom]; }
    double block_prob(int b) const { return block_probs_[b]; }

private:
    SpacePtr space_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
    std::vector<double> block_probs_;
};

SubAlgebra build_subalgebra(const SpacePtr& space,
                            const std::vector<std::vector<int>>& blocks);
SubAlgebra build_subalgebra_by_id(const SpacePtr& space,
                                  const std::vector<std::vector<std::string>>& blocks);
SubAlgebra finest_algebra(const SpacePtr& space);
SubAlgebra trivial_algebra(const SpacePtr& space);

/// True iff every block of g is contained in a block of f (g refines f).
bool is_coarser(const SubAlgebra& f, const SubAlgebra& g);

inline bool same_space(const SpacePtr& a, const SpacePtr& b) { return a.get() == b.get(); }

void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* op);

} // namespace condrisk

#endif
