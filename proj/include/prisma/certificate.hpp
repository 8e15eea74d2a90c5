#pragma once

#include <string>

#include "prisma/monoidexpr.hpp"

namespace prisma {

/// One node of a prismality derivation. Leaves record base facts, inner
/// nodes cite the closure rule matching the expression node; purity side
/// conditions carry how they were discharged.
struct CertNode {
    std::string rule;
    bool almost_prismal = false;
    bool pure = false;
    std::string purity_discharge;  // "", "structural", "saturation-check"
    std::vector<CertNode> children;

    bool prismal() const { return almost_prismal && pure; }
};

struct PrismalityCertificate {
    CertNode root;
};

/// Build a checkable derivation that the expression's monoid is (almost)
/// prismal. Throws CertificateUnavailable when a node kind has no applicable
/// rule (a product or non-surjective preimage over a non-pure argument).
PrismalityCertificate prismality_certificate(const MonoidExpr& e);

/// Re-validate a certificate against an expression: every rule must match
/// the node kind, every side condition must hold, and the recorded
/// conclusions must follow from the children.
bool check_certificate(const PrismalityCertificate& c, const MonoidExpr& e);

}  // namespace prisma
