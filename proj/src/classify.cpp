#include "bei/errors.hpp"
#include "bei/graph_io.hpp"
#include "bei/ideal_props.hpp"
#include "bei/pipeline.hpp"

namespace bei {

namespace {

std::string witness_text(const ClassRecord& r) {
  if (!r.witness) return "none";
  if (r.witness->kind == Witness::Kind::Cutset) return "cutset " + r.witness->cutset.to_string();
  return "face " + format_face(r.n, r.witness->face);
}

void check_implications(const ClassRecord& r) {
  auto fail = [&](const char* what) { throw TheoremContradiction(what, r.graph6, witness_text(r)); };
  if (r.accessible.value_or(false) && !r.unmixed.value_or(true)) fail("accessible but not unmixed");
  if (r.strongly_unmixed.value_or(false) && r.accessible.has_value() && !*r.accessible) {
    fail("strongly unmixed but not accessible");
  }
  if (r.s2.value_or(false) && r.accessible.has_value() && !*r.accessible) fail("s2 but not accessible");
}

}  // namespace

ClassRecord classify(const Graph& g, const ClassifyOptions& opts, SuMemo& memo) {
  if (g.order() == 0 || !is_connected(g)) throw InvalidInput("classify needs a connected graph");
  ClassRecord r;
  r.certificate = canonical_certificate(g);
  r.graph6 = encode_graph6(g);
  r.n = g.order();
  r.edge_count = g.edge_count();

  r.indecomposable = !is_decomposable(g);
  if (opts.short_circuit && !*r.indecomposable) return r;

  const AccessibilityReport acc = check_accessible(g);
  r.unmixed = acc.unmixed;
  if (acc.witness) r.witness = Witness{Witness::Kind::Cutset, *acc.witness, 0};
  if (opts.short_circuit && !acc.unmixed) return r;
  r.accessible = acc.accessible;
  r.strongly_unmixed = is_strongly_unmixed(g, memo);

  if (opts.s2) {
    const S2Report s2 = check_s2(g);
    r.s2 = s2.s2;
    if (!r.witness && s2.witness) r.witness = Witness{Witness::Kind::Face, {}, *s2.witness};
  }
  if (opts.complex) {
    const FacetComplex c = delta_facets(g);
    r.f_vector = f_vector(c);
    r.h_vector = h_vector(*r.f_vector, c.max_facet_size());
    r.multiplicity = multiplicity(c);
  }
  check_implications(r);
  return r;
}

ClassRecord classify(const Graph& g, const ClassifyOptions& opts) {
  SuMemo memo;
  return classify(g, opts, memo);
}

}  // namespace bei
