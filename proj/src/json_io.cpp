#include "aowf/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace aowf {

json bits_to_json(const Bits& b) { return json(b.str()); }

Bits bits_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a bit string");
  return Bits(j.get<std::string>());
}

json ev_to_json(const ExtendedValue& v) {
  if (!v.has_value()) return json(nullptr);
  return bits_to_json(*v);
}

json nat_to_json(const Nat& n) { return json(n.str()); }

json instance_to_json(const SubsetSumInstance& inst) {
  json j;
  j["kind"] = "subset-sum";
  j["width"] = inst.width;
  j["items"] = inst.items;
  j["target"] = inst.target;
  j["encoding"] = encode_subset_sum(inst).str();
  return j;
}

SubsetSumInstance instance_from_json(const json& j) {
  if (j.value("kind", "") != std::string("subset-sum")) {
    throw std::invalid_argument("instance file: kind must be \"subset-sum\"");
  }
  SubsetSumInstance inst;
  inst.width = j.at("width").get<unsigned>();
  inst.items = j.at("items").get<std::vector<std::uint32_t>>();
  inst.target = j.at("target").get<std::uint32_t>();
  const Bits enc = encode_subset_sum(inst);
  if (j.contains("encoding") && j.at("encoding").get<std::string>() != enc.str()) {
    throw std::invalid_argument("instance file: encoding does not match the fields");
  }
  return inst;
}

namespace {

json violation_to_json(const Violation& v) {
  json j;
  j["inputs"] = json::array();
  for (const Bits& b : v.inputs) j["inputs"].push_back(bits_to_json(b));
  j["lhs_chain"] = json::array();
  for (const ExtendedValue& e : v.lhs_chain) j["lhs_chain"].push_back(ev_to_json(e));
  j["rhs_chain"] = json::array();
  for (const ExtendedValue& e : v.rhs_chain) j["rhs_chain"].push_back(ev_to_json(e));
  j["note"] = v.note;
  return j;
}

json universe_to_json(const std::string& provenance, std::size_t size) {
  json j;
  j["provenance"] = provenance;
  j["size"] = size;
  return j;
}

}  // namespace

json report_to_json(const PropertyReport& r) {
  json j;
  j["property"] = r.property;
  j["universe"] = universe_to_json(r.universe_provenance, r.universe_size);
  j["checked"] = r.checked;
  j["violations"] = json::array();
  for (const Violation& v : r.violations) j["violations"].push_back(violation_to_json(v));
  j["verdict"] = r.pass() ? "pass" : "fail";
  return j;
}

json census_to_json(const AmbiguityProfile& p) {
  json j;
  j["universe"] = universe_to_json(p.universe_provenance, p.universe_size);
  j["pairs_checked"] = p.pairs_checked;
  j["domain_pairs"] = p.domain_pairs;
  json max;
  max["image"] = bits_to_json(p.max_image);
  max["count"] = p.max_count;
  max["preimages"] = json::array();
  for (const auto& [a, b] : p.max_preimages) {
    max["preimages"].push_back(json::array({bits_to_json(a), bits_to_json(b)}));
  }
  j["max"] = max;
  json per_len = json::object();
  for (const auto& [len, count] : p.max_by_output_length) {
    per_len[std::to_string(len)] = count;
  }
  j["max_by_output_length"] = per_len;
  constexpr std::size_t kImageListCap = 4096;
  if (p.counts.size() <= kImageListCap) {
    json images = json::array();
    for (const auto& [image, count] : p.counts) {
      json e;
      e["image"] = bits_to_json(image);
      e["count"] = count;
      json left = json::array();
      if (auto it = p.left_sets.find(image); it != p.left_sets.end()) {
        for (const Bits& b : it->second) left.push_back(bits_to_json(b));
      }
      json right = json::array();
      if (auto it = p.right_sets.find(image); it != p.right_sets.end()) {
        for (const Bits& b : it->second) right.push_back(bits_to_json(b));
      }
      e["left"] = left;
      e["right"] = right;
      images.push_back(e);
    }
    j["images"] = images;
  } else {
    j["images_omitted"] = true;
  }
  return j;
}

json chain_to_json(const CounterexampleChain& c) {
  json j;
  j["x0"] = bits_to_json(c.x0);
  j["w1"] = bits_to_json(c.w1);
  j["w2"] = bits_to_json(c.w2);
  j["trashbin"] = bits_to_json(c.trashbin);
  j["a"] = bits_to_json(c.a);
  j["b"] = bits_to_json(c.b);
  j["c"] = bits_to_json(c.c);
  j["left_inner"] = bits_to_json(c.left_inner);
  j["left_result"] = bits_to_json(c.left_result);
  j["right_inner"] = bits_to_json(c.right_inner);
  j["right_result"] = bits_to_json(c.right_result);
  j["sides_differ"] = (c.left_result != c.right_result);
  return j;
}

json transcript_to_json(const Transcript& t, const json* attacks) {
  json j;
  j["session"] = t.session_id;
  j["seed"] = t.rng_descriptor;
  j["fn"] = t.fn_descriptor;
  j["public"] = bits_to_json(t.public_x);
  json secrets = json::object();
  for (const auto& [party, s] : t.secrets) secrets[party] = bits_to_json(s);
  j["secrets"] = secrets;
  j["messages"] = json::array();
  for (const Message& m : t.messages) {
    json e;
    e["from"] = m.from;
    e["to"] = m.to;
    e["payload"] = bits_to_json(m.payload);
    j["messages"].push_back(e);
  }
  json keys = json::object();
  for (const auto& [party, k] : t.keys) keys[party] = bits_to_json(k);
  j["keys"] = keys;
  j["keys_agree"] = t.keys_agree();
  j["eve_observations"] = json::array();
  for (const Bits& b : t.eve_observations) j["eve_observations"].push_back(bits_to_json(b));
  j["attacks"] = attacks ? *attacks : json::object();
  return j;
}

json growth_to_json(const PreimageGrowthResult& h) {
  json j;
  j["image"] = bits_to_json(h.image);
  j["count"] = h.count;
  j["universe_max_len"] = h.universe_max_len;
  j["preimages"] = json::array();
  for (const auto& [a, b] : h.preimages) {
    j["preimages"].push_back(json::array({bits_to_json(a), bits_to_json(b)}));
  }
  return j;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << canonical_dump(j);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  return json::parse(in);
}

}  // namespace aowf
