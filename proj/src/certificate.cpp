#include "prisma/certificate.hpp"

namespace prisma {

namespace {

bool fingen_saturation_check(const AffineMonoid& m) {
    SaturatedMonoid s = saturate_monoid(m);
    for (const auto& g : s.all_generators())
        if (monoid_membership(m, g).verdict != Tri::yes) return false;
    return true;
}

bool map_is_epi(const IntMatrix& map) { return rank(map) == map.nrows; }

CertNode build(const MonoidExpr& e) {
    CertNode node;
    switch (e.kind()) {
        case MonoidExpr::Kind::lex:
            node.rule = "lex-leaf";
            node.almost_prismal = node.pure = true;
            node.purity_discharge = "structural";
            return node;
        case MonoidExpr::Kind::orthant:
            node.rule = "orthant-leaf";
            node.almost_prismal = node.pure = true;
            node.purity_discharge = "structural";
            return node;
        case MonoidExpr::Kind::lattice:
            node.rule = "lattice-leaf";
            node.almost_prismal = node.pure = true;
            node.purity_discharge = "structural";
            return node;
        case MonoidExpr::Kind::fingen:
            node.rule = "fingen-leaf";
            node.almost_prismal = true;
            if (fingen_saturation_check(e.monoid())) {
                node.pure = true;
                node.purity_discharge = "saturation-check";
            }
            return node;
        case MonoidExpr::Kind::intersect: {
            node.rule = "intersection";
            node.almost_prismal = true;
            node.pure = true;
            node.purity_discharge = "structural";
            for (const auto& c : e.args()) {
                CertNode ch = build(c);
                node.almost_prismal = node.almost_prismal && ch.almost_prismal;
                node.pure = node.pure && ch.pure;
                node.children.push_back(std::move(ch));
            }
            if (!node.pure) node.purity_discharge.clear();
            return node;
        }
        case MonoidExpr::Kind::product: {
            node.rule = "product";
            for (const auto& c : e.args()) {
                CertNode ch = build(c);
                if (!ch.prismal())
                    throw CertificateUnavailable(
                        "product rule requires prismal factors; a factor is not certified pure");
                node.children.push_back(std::move(ch));
            }
            node.almost_prismal = node.pure = true;
            node.purity_discharge = "structural";
            return node;
        }
        case MonoidExpr::Kind::preimage: {
            CertNode ch = build(e.arg());
            if (map_is_epi(e.map())) {
                node.rule = "preimage-epi";
                node.almost_prismal = ch.almost_prismal;
                node.pure = ch.pure;
            } else if (ch.prismal()) {
                // factor the map through its image: the restriction of the
                // argument to the image subspace stays prismal and the
                // induced surjection onto image coordinates applies
                node.rule = "preimage-general";
                node.almost_prismal = true;
                node.pure = true;
            } else {
                throw CertificateUnavailable(
                    "preimage of a non-surjective map needs a prismal argument");
            }
            if (node.pure) node.purity_discharge = "structural";
            node.children.push_back(std::move(ch));
            return node;
        }
        case MonoidExpr::Kind::restriction: {
            CertNode ch = build(e.arg());
            node.rule = "restriction";
            node.almost_prismal = ch.almost_prismal;
            node.pure = ch.pure;
            if (node.pure) node.purity_discharge = "structural";
            node.children.push_back(std::move(ch));
            return node;
        }
    }
    throw std::logic_error("unreachable expression kind");
}

bool check(const CertNode& node, const MonoidExpr& e) {
    auto expect_children = [&](std::size_t k) { return node.children.size() == k; };
    switch (e.kind()) {
        case MonoidExpr::Kind::lex:
            return node.rule == "lex-leaf" && node.prismal() && expect_children(0);
        case MonoidExpr::Kind::orthant:
            return node.rule == "orthant-leaf" && node.prismal() && expect_children(0);
        case MonoidExpr::Kind::lattice:
            return node.rule == "lattice-leaf" && node.prismal() && expect_children(0);
        case MonoidExpr::Kind::fingen: {
            if (node.rule != "fingen-leaf" || !expect_children(0)) return false;
            if (!node.almost_prismal) return false;
            if (node.pure) {
                if (node.purity_discharge != "saturation-check") return false;
                if (!fingen_saturation_check(e.monoid())) return false;
            }
            return true;
        }
        case MonoidExpr::Kind::intersect: {
            if (node.rule != "intersection" || !expect_children(e.args().size())) return false;
            bool ap = true, pure = true;
            for (std::size_t i = 0; i < e.args().size(); ++i) {
                if (!check(node.children[i], e.args()[i])) return false;
                ap = ap && node.children[i].almost_prismal;
                pure = pure && node.children[i].pure;
            }
            return node.almost_prismal == ap && node.pure == pure;
        }
        case MonoidExpr::Kind::product: {
            if (node.rule != "product" || !expect_children(e.args().size())) return false;
            for (std::size_t i = 0; i < e.args().size(); ++i) {
                if (!check(node.children[i], e.args()[i])) return false;
                if (!node.children[i].prismal()) return false;
            }
            return node.prismal();
        }
        case MonoidExpr::Kind::preimage: {
            if (!expect_children(1)) return false;
            if (!check(node.children[0], e.arg())) return false;
            const CertNode& ch = node.children[0];
            if (node.rule == "preimage-epi") {
                if (!map_is_epi(e.map())) return false;
                return node.almost_prismal == ch.almost_prismal && node.pure == ch.pure;
            }
            if (node.rule == "preimage-general") return ch.prismal() && node.prismal();
            return false;
        }
        case MonoidExpr::Kind::restriction: {
            if (node.rule != "restriction" || !expect_children(1)) return false;
            if (!check(node.children[0], e.arg())) return false;
            const CertNode& ch = node.children[0];
            return node.almost_prismal == ch.almost_prismal && node.pure == ch.pure;
        }
    }
    return false;
}

}  // namespace

PrismalityCertificate prismality_certificate(const MonoidExpr& e) {
    return PrismalityCertificate{build(e)};
}

bool check_certificate(const PrismalityCertificate& c, const MonoidExpr& e) {
    return check(c.root, e);
}

}  // namespace prisma
