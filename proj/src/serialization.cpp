#include "heisred/serialization.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace heisred {

using nlohmann::json;

namespace {

json integer_json(Integer const &x) { return to_string(x); }

json elem_json(HeisElem const &x) {
  return json::array({integer_json(x.alpha()), integer_json(x.beta()), integer_json(x.gamma())});
}

json components_json(PowerElem const &u) {
  json out = json::object();
  for (auto const &[index, x] : u.components()) {
    out[std::to_string(index)] = elem_json(x);
  }
  return out;
}

json operands_json(std::array<std::size_t, 3> const &operands) {
  return json::array({operands[0], operands[1], operands[2]});
}

std::string dump(json const &doc) { return doc.dump(2) + "\n"; }

// Accessors that report where the document went wrong.
json const &field(json const &parent, std::string const &key, std::string const &pointer) {
  if (!parent.is_object()) {
    throw SchemaError(pointer, "expected an object");
  }
  auto it = parent.find(key);
  if (it == parent.end()) {
    throw SchemaError(pointer + "/" + key, "missing field");
  }
  return *it;
}

std::size_t as_size(json const &value, std::string const &pointer) {
  if (!value.is_number_unsigned()) {
    throw SchemaError(pointer, "expected a nonnegative integer");
  }
  return value.get<std::size_t>();
}

bool as_bool(json const &value, std::string const &pointer) {
  if (!value.is_boolean()) {
    throw SchemaError(pointer, "expected a boolean");
  }
  return value.get<bool>();
}

std::string as_string(json const &value, std::string const &pointer) {
  if (!value.is_string()) {
    throw SchemaError(pointer, "expected a string");
  }
  return value.get<std::string>();
}

Integer as_integer(json const &value, std::string const &pointer) {
  std::string text = as_string(value, pointer);
  try {
    return parse_integer(text);
  } catch (std::invalid_argument const &) {
    throw SchemaError(pointer, "expected a decimal integer string, got '" + text + "'");
  }
}

json const &as_array(json const &value, std::string const &pointer, std::optional<std::size_t> size = {}) {
  if (!value.is_array()) {
    throw SchemaError(pointer, "expected an array");
  }
  if (size && value.size() != *size) {
    throw SchemaError(pointer, "expected " + std::to_string(*size) + " entries");
  }
  return value;
}

template <typename F>
auto convert(std::string const &pointer, F &&body) {
  try {
    return body();
  } catch (std::invalid_argument const &ex) {
    throw SchemaError(pointer, ex.what());
  } catch (std::out_of_range const &ex) {
    throw SchemaError(pointer, ex.what());
  }
}

HeisElem elem_from(json const &value, std::string const &pointer) {
  as_array(value, pointer, 3);
  return {as_integer(value[0], pointer + "/0"), as_integer(value[1], pointer + "/1"),
          as_integer(value[2], pointer + "/2")};
}

PowerElem components_from(json const &value, std::size_t ambient, std::string const &pointer) {
  if (!value.is_object()) {
    throw SchemaError(pointer, "expected an object");
  }
  PowerElem out(ambient);
  for (auto const &[key, x] : value.items()) {
    std::string where = pointer + "/" + key;
    std::size_t index = 0;
    auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), index);
    if (ec != std::errc() || end != key.data() + key.size() || index == 0 || index > ambient) {
      throw SchemaError(where, "component index outside [1, " + std::to_string(ambient) + "]");
    }
    HeisElem elem = elem_from(x, where);
    if (elem.is_identity()) {
      throw SchemaError(where, "identity components are omitted in canonical form");
    }
    out.set(index, elem);
  }
  return out;
}

std::array<std::size_t, 3> operands_from(json const &value, std::string const &pointer) {
  as_array(value, pointer, 3);
  return {as_size(value[0], pointer + "/0"), as_size(value[1], pointer + "/1"),
          as_size(value[2], pointer + "/2")};
}

std::string hex(unsigned char const *bytes, std::size_t size) {
  std::ostringstream out;
  for (std::size_t k = 0; k < size; ++k) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(bytes[k]);
  }
  return out.str();
}

}  // namespace

std::string serialize_instance(ReductionInstance const &inst) {
  json doc;
  doc["version"] = kInstanceVersion;
  doc["n"] = inst.n();
  doc["e"] = inst.e;
  doc["d"] = inst.d;
  doc["q"] = inst.q;
  doc["upsilon"] = integer_json(inst.upsilon);
  doc["degenerate"] = inst.degenerate;

  json gens = json::array();
  for (auto const &g : inst.problem.generators) {
    gens.push_back({
        {"name", g.name},
        {"provenance",
         {{"block", to_string(g.origin.block)},
          {"block_index", g.origin.block_index},
          {"slot", g.origin.slot},
          {"role", to_string(g.origin.role)},
          {"variable", g.origin.variable}}},
        {"components", components_json(g.element)},
    });
  }
  doc["generators"] = gens;
  doc["target"] = {{"components", components_json(inst.problem.target)}};

  json layout = json::array();
  for (auto const &block : inst.layout) {
    layout.push_back({
        {"kind", to_string(block.kind)},
        {"index", block.index},
        {"first_component", block.first_component},
        {"width", block.width},
        {"first_generator", block.first_generator},
        {"generator_count", block.generator_count},
        {"operands", operands_json(block.operands)},
    });
  }
  doc["layout"] = layout;

  json equalities = json::array();
  for (auto const &m : inst.equality_markers) {
    equalities.push_back({
        {"k", m.k},
        {"component", m.component},
        {"left", m.left},
        {"right", m.right},
        {"left_carrier", m.left_carrier},
        {"right_carrier", m.right_carrier},
    });
  }
  auto const &cm = inst.constant_marker;
  doc["markers"] = {
      {"equalities", equalities},
      {"constant",
       {{"component", cm.component},
        {"variable", cm.variable},
        {"carrier", cm.carrier},
        {"value", integer_json(cm.value)}}},
  };
  return dump(doc);
}

ReductionInstance deserialize_instance(std::string const &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const &ex) {
    throw SchemaError("", std::string("malformed JSON: ") + ex.what());
  }
  auto const &version = field(doc, "version", "");
  if (!version.is_number_integer() || version.get<long long>() != kInstanceVersion) {
    throw SchemaError("/version", "unsupported version " + version.dump() + ", expected " +
                                      std::to_string(kInstanceVersion));
  }

  ReductionInstance inst;
  std::size_t n = as_size(field(doc, "n", ""), "/n");
  if (n == 0) {
    throw SchemaError("/n", "ambient power must be positive");
  }
  inst.problem.ambient = n;
  inst.e = as_size(field(doc, "e", ""), "/e");
  inst.d = as_size(field(doc, "d", ""), "/d");
  inst.q = as_size(field(doc, "q", ""), "/q");
  inst.upsilon = as_integer(field(doc, "upsilon", ""), "/upsilon");
  inst.degenerate = as_bool(field(doc, "degenerate", ""), "/degenerate");

  auto const &gens = as_array(field(doc, "generators", ""), "/generators");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::string where = "/generators/" + std::to_string(k);
    auto const &g = gens[k];
    Generator gen{as_string(field(g, "name", where), where + "/name"), PowerElem(n), {}};
    std::string prov = where + "/provenance";
    auto const &p = field(g, "provenance", where);
    gen.origin.block = convert(prov + "/block", [&] {
      return block_kind_from_string(as_string(field(p, "block", prov), prov + "/block"));
    });
    gen.origin.block_index = as_size(field(p, "block_index", prov), prov + "/block_index");
    gen.origin.slot = as_string(field(p, "slot", prov), prov + "/slot");
    gen.origin.role = convert(prov + "/role", [&] {
      return exponent_role_from_string(as_string(field(p, "role", prov), prov + "/role"));
    });
    gen.origin.variable = as_size(field(p, "variable", prov), prov + "/variable");
    gen.element = components_from(field(g, "components", where), n, where + "/components");
    inst.problem.generators.push_back(std::move(gen));
  }
  inst.problem.target = components_from(field(field(doc, "target", ""), "components", "/target"), n,
                                        "/target/components");

  auto const &layout = as_array(field(doc, "layout", ""), "/layout");
  for (std::size_t k = 0; k < layout.size(); ++k) {
    std::string where = "/layout/" + std::to_string(k);
    auto const &b = layout[k];
    BlockLayout block;
    block.kind = convert(where + "/kind", [&] {
      return block_kind_from_string(as_string(field(b, "kind", where), where + "/kind"));
    });
    block.index = as_size(field(b, "index", where), where + "/index");
    block.first_component = as_size(field(b, "first_component", where), where + "/first_component");
    block.width = as_size(field(b, "width", where), where + "/width");
    block.first_generator = as_size(field(b, "first_generator", where), where + "/first_generator");
    block.generator_count = as_size(field(b, "generator_count", where), where + "/generator_count");
    block.operands = operands_from(field(b, "operands", where), where + "/operands");
    if (block.first_generator + block.generator_count > inst.problem.generators.size()) {
      throw SchemaError(where, "block refers to generators past the end of the list");
    }
    if (block.first_component == 0 || block.first_component + block.width - 1 > n) {
      throw SchemaError(where, "block components outside [1, n]");
    }
    inst.layout.push_back(block);
  }

  auto const &markers = field(doc, "markers", "");
  auto const &equalities = as_array(field(markers, "equalities", "/markers"), "/markers/equalities");
  for (std::size_t k = 0; k < equalities.size(); ++k) {
    std::string where = "/markers/equalities/" + std::to_string(k);
    auto const &m = equalities[k];
    inst.equality_markers.push_back({
        as_size(field(m, "k", where), where + "/k"),
        as_size(field(m, "component", where), where + "/component"),
        as_size(field(m, "left", where), where + "/left"),
        as_size(field(m, "right", where), where + "/right"),
        as_size(field(m, "left_carrier", where), where + "/left_carrier"),
        as_size(field(m, "right_carrier", where), where + "/right_carrier"),
    });
  }
  std::string where = "/markers/constant";
  auto const &c = field(markers, "constant", "/markers");
  inst.constant_marker = {
      as_size(field(c, "component", where), where + "/component"),
      as_size(field(c, "variable", where), where + "/variable"),
      as_size(field(c, "carrier", where), where + "/carrier"),
      as_integer(field(c, "value", where), where + "/value"),
  };
  return inst;
}

std::string instance_hash(ReductionInstance const &inst) {
  std::string text = serialize_instance(inst);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &size, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  return hex(digest, size);
}

std::string serialize_witness(WitnessFile const &w) {
  json word = json::array();
  for (auto const &entry : w.word) {
    word.push_back(json::array({entry.generator, to_string(entry.multiplicity)}));
  }
  return dump({{"instance_hash", w.instance_hash}, {"word", word}});
}

WitnessFile deserialize_witness(std::string const &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const &ex) {
    throw SchemaError("", std::string("malformed JSON: ") + ex.what());
  }
  WitnessFile out;
  out.instance_hash = as_string(field(doc, "instance_hash", ""), "/instance_hash");
  auto const &word = as_array(field(doc, "word", ""), "/word");
  for (std::size_t k = 0; k < word.size(); ++k) {
    std::string where = "/word/" + std::to_string(k);
    as_array(word[k], where, 2);
    WordEntry entry{as_size(word[k][0], where + "/0"), as_integer(word[k][1], where + "/1")};
    if (entry.multiplicity < 0) {
      throw SchemaError(where + "/1", "multiplicity must be nonnegative");
    }
    out.word.push_back(entry);
  }
  return out;
}

std::string serialize_skolem(NormalizedSkolem const &ns) {
  json mul = json::array();
  for (auto const &m : ns.mul) {
    mul.push_back(operands_json(m));
  }
  json add = json::array();
  for (auto const &a : ns.add) {
    add.push_back(operands_json(a));
  }
  json equalities = json::array();
  for (auto const &eq : ns.equalities) {
    equalities.push_back(json::array({eq.left, eq.right}));
  }
  json variables = json::array();
  for (std::size_t k = 0; k < ns.provenance.size(); ++k) {
    auto const &p = ns.provenance[k];
    variables.push_back({
        {"index", k + 1},
        {"name", p.variable.name},
        {"origin", to_string(p.variable.origin)},
        {"representative", p.representative},
    });
  }
  return dump({
      {"e", ns.e()},
      {"d", ns.d()},
      {"q", ns.q()},
      {"upsilon", integer_json(ns.upsilon)},
      {"degenerate", ns.degenerate},
      {"mul", mul},
      {"add", add},
      {"equalities", equalities},
      {"constant", {{"variable", ns.const_var}, {"value", integer_json(ns.const_value)}}},
      {"variables", variables},
  });
}

std::string read_file(std::string const &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read " + path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) {
    throw IoError("error while reading " + path);
  }
  return out.str();
}

void write_file_atomic(std::string const &path, std::string const &content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot write " + temp.string());
    }
    out << content;
    out.flush();
    if (!out) {
      throw IoError("error while writing " + temp.string());
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw IoError("cannot rename into " + path);
  }
}

}  // namespace heisred
