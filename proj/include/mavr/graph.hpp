#pragma once

#include <string>
#include <vector>

#include "mavr/linalg.hpp"

namespace mavr {

/// A fixed point set with optional per-point class labels. Label 0 means
/// "unlabeled"; real classes are 1..c. `labels` is either empty (no label
/// information at all) or has one entry per point.
struct Dataset {
    int n = 0;
    int d = 0;
    Matrix points;            // n x d
    std::vector<int> labels;  // empty, or size n with entries in {0, 1..c}

    bool has_labels() const { return !labels.empty(); }
    /// Largest class id present (0 if unlabeled).
    int num_classes() const;
    void validate() const;
};

enum class KernelKind { gaussian, local_scaling, cosine_knn };

struct KernelSpec {
    KernelKind kind = KernelKind::gaussian;
    double sigma = 1.0;  // gaussian width
    int k = 7;           // neighbor count for local_scaling / cosine_knn
};

enum class LaplacianKind { normalized, unnormalized };

/// Pairwise similarity matrix W. The diagonal is always zero. Gaussian and
/// local-scaling entries lie in [0, 1]; cosine entries in [-1, 1] and are
/// kept only between mutual k-nearest neighbors (Euclidean neighborhoods,
/// distance ties broken by index).
SymMatrix build_similarity(const Dataset& data, const KernelSpec& spec);

/// Graph Laplacian of W: I - D^{-1/2} W D^{-1/2} (normalized) or D - W
/// (unnormalized). `jitter` adds 1e-10 to the diagonal for callers that
/// need a strictly positive spectrum.
SymMatrix build_laplacian(const SymMatrix& w, LaplacianKind kind, bool jitter = false);

/// Dataset CSV: one row per point, feature columns then an optional final
/// integer label column; header optional; an empty final field means
/// "unlabeled". Files written here always carry the header
/// x1,...,xd,label.
Dataset read_dataset_csv(const std::string& path);
void write_dataset_csv(const Dataset& data, const std::string& path);

const char* to_string(KernelKind k);
const char* to_string(LaplacianKind k);
KernelKind kernel_kind_from_string(const std::string& s);
LaplacianKind laplacian_kind_from_string(const std::string& s);

}  // namespace mavr
