#include "efsm/snapshot.hpp"

#include "config_json.hpp"

namespace efsm {

namespace {

using detail::json;
using detail::ObjectReader;
constexpr Errc kCode = Errc::snapshot_error;

json matrix_to_json(const Matrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", m.data()}};
}

Matrix matrix_from_json(const json& j, const std::string& path) {
  ObjectReader r(j, path, kCode);
  std::size_t rows = 0, cols = 0;
  r.get("rows", rows);
  r.get("cols", cols);
  const Vector data = detail::as_vector(r.require("data"), r.child("data"), kCode);
  r.finish();
  if (data.size() != rows * cols) throw Error(kCode, path + ": data length does not match rows x cols");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = data[i * cols + k];
  return m;
}

}  // namespace

std::string snapshot_to_json(const EfsmModel& model) {
  json doc;
  doc["format"] = kSnapshotFormat;
  doc["version"] = kSnapshotVersion;
  doc["config"] = detail::to_json(model.config());

  const PotentialAccumulators& acc = model.accumulators();
  doc["accumulators"] = {
      {"b", acc.b}, {"col_sums", acc.col_sums}, {"count", acc.count}, {"previous", acc.previous}};

  json clusters = json::array();
  const double floor = model.config().spread_floor;
  for (const Cluster& c : model.clusters())
    clusters.push_back({{"id", c.id},
                        {"center", c.center},
                        {"potential", c.potential},
                        {"member_count", c.member_count},
                        {"member_mean", c.member_mean},
                        {"member_m2", c.member_m2},
                        {"spread", c.spread(floor)}});
  doc["clusters"] = clusters;

  const TransitionStack& stack = model.transitions();
  json blocks = json::array();
  for (const TransitionStack::Block& b : stack.blocks())
    blocks.push_back({{"f", matrix_to_json(b.f)}, {"f_o", b.f_o}, {"exponent", b.exponent}});
  doc["transitions"] = {{"phi", stack.phi()}, {"eps_bar", stack.eps_bar()}, {"actions", blocks}};

  doc["last_estimate"] = model.last_estimate() ? json(model.last_estimate()->probs) : json(nullptr);
  doc["next_cluster_id"] = model.next_cluster_id();
  return doc.dump(1) + "\n";
}

EfsmModel snapshot_from_json(const std::string& text) {
  const json doc = detail::parse_text(text, "snapshot", kCode);
  ObjectReader r(doc, "", kCode);

  std::string format;
  r.get("format", format);
  if (format != kSnapshotFormat) throw Error(kCode, "not an " + std::string(kSnapshotFormat) + " document");
  int version = 0;
  r.get("version", version);
  if (version != kSnapshotVersion)
    throw Error(kCode, "unsupported snapshot version " + std::to_string(version));

  ModelConfig config = detail::model_from_json(r.require("config"), "config", kCode);
  try {
    config.validate();
  } catch (const Error& e) {
    throw Error(kCode, std::string("config: ") + e.what());
  }

  ObjectReader ar(r.require("accumulators"), "accumulators", kCode);
  PotentialAccumulators acc;
  ar.get("b", acc.b);
  ar.get("col_sums", acc.col_sums);
  ar.get("count", acc.count);
  ar.get("previous", acc.previous);
  ar.finish();

  std::vector<Cluster> clusters;
  const json& cj = r.require("clusters");
  if (!cj.is_array()) throw Error(kCode, "clusters: expected an array");
  for (std::size_t i = 0; i < cj.size(); ++i) {
    ObjectReader cr(cj[i], "clusters." + std::to_string(i), kCode);
    Cluster c;
    cr.get("id", c.id);
    cr.get("center", c.center);
    cr.get("potential", c.potential);
    cr.get("member_count", c.member_count);
    cr.get("member_mean", c.member_mean);
    cr.get("member_m2", c.member_m2);
    cr.find("spread");  // derived from the Welford sums; informational only
    cr.finish();
    clusters.push_back(std::move(c));
  }

  ObjectReader tr(r.require("transitions"), "transitions", kCode);
  double phi = 0.0, eps_bar = 0.0;
  tr.get("phi", phi);
  tr.get("eps_bar", eps_bar);
  const json& bj = tr.require("actions");
  if (!bj.is_array()) throw Error(kCode, "transitions.actions: expected an array");
  std::vector<TransitionStack::Block> blocks;
  for (std::size_t i = 0; i < bj.size(); ++i) {
    const std::string path = "transitions.actions." + std::to_string(i);
    ObjectReader br(bj[i], path, kCode);
    TransitionStack::Block b;
    b.f = matrix_from_json(br.require("f"), br.child("f"));
    br.get("f_o", b.f_o);
    if (const json* e = br.find("exponent")) {
      if (!e->is_array()) br.fail("exponent", "expected an array of integers");
      for (std::size_t k = 0; k < e->size(); ++k)
        b.exponent.push_back(static_cast<int>(
            detail::as_integer((*e)[k], br.child("exponent") + "[" + std::to_string(k) + "]", kCode)));
    }
    br.finish();
    blocks.push_back(std::move(b));
  }
  tr.finish();
  TransitionStack stack = [&] {
    try {
      return TransitionStack::from_blocks(phi, eps_bar, std::move(blocks));
    } catch (const Error& e) {
      if (e.code() == kCode) throw;
      throw Error(kCode, std::string("transitions: ") + e.what());
    }
  }();

  std::optional<StateEstimate> last;
  if (const json* le = r.find("last_estimate"); le && !le->is_null())
    last = StateEstimate{detail::as_vector(*le, "last_estimate", kCode)};

  ClusterId next_id = 1;
  r.get("next_cluster_id", next_id);
  r.finish();

  return EfsmModel::restore(std::move(config), std::move(clusters), std::move(acc), std::move(stack),
                            std::move(last), next_id);
}

void save_snapshot(const EfsmModel& model, const std::string& path) {
  detail::write_text_file(path, snapshot_to_json(model));
}

EfsmModel load_snapshot(const std::string& path) {
  return snapshot_from_json(detail::read_text_file(path, kCode));
}

}  // namespace efsm
