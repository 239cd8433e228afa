#include "fsg/constants.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "fsg/errors.hpp"

namespace fsg {

namespace {

std::string g_source;

GadgetConstants load_or_default() {
  const char* env = std::getenv("FS_CONSTANTS");
  std::string path = env ? env : "fs_constants.json";
  std::ifstream probe(path);
  if (!probe) return GadgetConstants{};
  g_source = path;
  return load_constants_file(path);
}

}  // namespace

const GadgetConstants& constants() {
  static GadgetConstants gc = load_or_default();
  return gc;
}

std::string constants_source() {
  constants();
  return g_source;
}

GadgetConstants load_constants_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open constants file: " + path);
  nlohmann::json j;
  in >> j;
  GadgetConstants gc;
  gc.c_rot = j.value("c_rot", gc.c_rot);
  gc.c_tt = j.value("c_tt", gc.c_tt);
  gc.c_et = j.value("c_et", gc.c_et);
  gc.c_3c = j.value("c_3c", gc.c_3c);
  gc.c_dt = j.value("c_dt", gc.c_dt);
  gc.k_star = j.value("k_star", gc.k_star);
  gc.k_dense = j.value("k_dense", gc.k_dense);
  gc.version = j.value("version", gc.version);
  return gc;
}

void write_constants_file(const std::string& path, const GadgetConstants& gc) {
  nlohmann::json j{
      {"version", gc.version}, {"c_rot", gc.c_rot},   {"c_tt", gc.c_tt},
      {"c_et", gc.c_et},       {"c_3c", gc.c_3c},     {"c_dt", gc.c_dt},
      {"k_star", gc.k_star},   {"k_dense", gc.k_dense}};
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write constants file: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace fsg
