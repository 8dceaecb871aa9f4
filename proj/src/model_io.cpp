// Copyright 2026 The screwdyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "screwdyn/model_io.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace screwdyn {

namespace {

using json = nlohmann::json;

// Collects diagnostics while reading typed fields.
class Reader {
 public:
  std::vector<Diagnostic> diags;

  void error(const std::string& path, const std::string& msg) {
    diags.push_back({path, msg});
  }

  const json* field(const json& obj, const std::string& key,
                    const std::string& path, bool required) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) error(join(path, key), "missing field");
      return nullptr;
    }
    return &*it;
  }

  std::optional<double> number(const json& v, const std::string& path) {
    if (!v.is_number()) {
      error(path, "expected a number");
      return std::nullopt;
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
      error(path, "non-finite number");
      return std::nullopt;
    }
    return d;
  }

  template <int N>
  std::optional<Eigen::Matrix<double, N, 1>> vec(const json& v,
                                                 const std::string& path) {
    if (!v.is_array() || v.size() != N) {
      error(path, "expected an array of " + std::to_string(N) + " numbers");
      return std::nullopt;
    }
    Eigen::Matrix<double, N, 1> out;
    for (int k = 0; k < N; ++k) {
      auto d = number(v[k], path + "[" + std::to_string(k) + "]");
      if (!d) return std::nullopt;
      out[k] = *d;
    }
    return out;
  }

  std::optional<Mat3> mat3(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 3) {
      error(path, "expected a 3x3 nested array");
      return std::nullopt;
    }
    Mat3 m;
    for (int r = 0; r < 3; ++r) {
      auto row = vec<3>(v[r], path + "[" + std::to_string(r) + "]");
      if (!row) return std::nullopt;
      m.row(r) = row->transpose();
    }
    return m;
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }
};

struct CrossCheck {
  int body;
  std::optional<Vec6> spatial, body_screw;
};

std::pair<int, int> line_col(std::string_view text, size_t byte) {
  int line = 1, col = 1;
  for (size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json to_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

json to_json(const Mat3& m) {
  json a = json::array();
  for (int r = 0; r < 3; ++r) a.push_back(to_json(Vec3(m.row(r).transpose())));
  return a;
}

}  // namespace

ChainModel parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    Diagnostic d{"", std::string("syntax error: ") + e.what(), line, col};
    throw ModelError({d});
  }

  Reader rd;
  if (!doc.is_object()) {
    rd.error("", "top level must be an object");
    throw ModelError(rd.diags);
  }

  std::string name;
  if (const json* v = rd.field(doc, "name", "", false)) {
    if (v->is_string()) {
      name = v->get<std::string>();
    } else {
      rd.error("name", "expected a string");
    }
  }
  Vec3 gravity(0.0, 0.0, -9.80665);
  if (const json* v = rd.field(doc, "gravity", "", false)) {
    if (auto g = rd.vec<3>(*v, "gravity")) gravity = *g;
  }

  std::vector<BodySpec> specs;
  std::vector<CrossCheck> checks;
  const json* bodies = rd.field(doc, "bodies", "", true);
  if (bodies && !bodies->is_array()) {
    rd.error("bodies", "expected an array");
    bodies = nullptr;
  }
  if (bodies) {
    for (size_t i = 0; i < bodies->size(); ++i) {
      const std::string p = "bodies[" + std::to_string(i) + "]";
      const json& b = (*bodies)[i];
      BodySpec s;
      if (!b.is_object()) {
        rd.error(p, "expected an object");
        continue;
      }
      if (const json* v = rd.field(b, "parent", p, true)) {
        if (v->is_number_integer()) {
          s.parent = v->get<int>() - 1;
        } else {
          rd.error(p + ".parent", "expected an integer");
        }
      }
      if (const json* v = rd.field(b, "mass", p, true)) {
        if (auto d = rd.number(*v, p + ".mass")) s.body.mass = *d;
      }
      if (const json* v = rd.field(b, "com", p, true)) {
        if (auto c = rd.vec<3>(*v, p + ".com")) s.body.com = *c;
      }
      if (const json* v = rd.field(b, "inertia_com", p, true)) {
        if (auto m = rd.mat3(*v, p + ".inertia_com")) s.body.inertia_com = *m;
      }
      if (const json* rp = rd.field(b, "ref_pose", p, false)) {
        const std::string pp = p + ".ref_pose";
        if (!rp->is_object()) {
          rd.error(pp, "expected an object");
        } else {
          if (const json* v = rd.field(*rp, "rotation", pp, false)) {
            if (auto m = rd.mat3(*v, pp + ".rotation")) {
              s.body.ref_pose.rot = Rotation3::unchecked(*m);
            }
          }
          if (const json* v = rd.field(*rp, "translation", pp, false)) {
            if (auto t = rd.vec<3>(*v, pp + ".translation")) {
              s.body.ref_pose.trans = *t;
            }
          }
        }
      }
      CrossCheck cc{static_cast<int>(i), std::nullopt, std::nullopt};
      const std::string jp = p + ".joint";
      const json* j = rd.field(b, "joint", p, true);
      if (j && !j->is_object()) {
        rd.error(jp, "expected an object");
        j = nullptr;
      }
      if (j) {
        if (const json* v = rd.field(*j, "type", jp, true)) {
          const std::string t = v->is_string() ? v->get<std::string>() : "";
          if (t == "revolute") {
            s.joint.kind = JointKind::revolute;
          } else if (t == "prismatic") {
            s.joint.kind = JointKind::prismatic;
          } else if (t == "helical") {
            s.joint.kind = JointKind::helical;
          } else {
            rd.error(jp + ".type",
                     "expected \"revolute\", \"prismatic\" or \"helical\"");
          }
        }
        if (const json* v = rd.field(*j, "axis", jp, true)) {
          if (auto a = rd.vec<3>(*v, jp + ".axis")) s.joint.axis = *a;
        }
        if (const json* v = rd.field(*j, "point", jp, false)) {
          if (auto a = rd.vec<3>(*v, jp + ".point")) s.joint.point = *a;
        }
        const bool helical = s.joint.kind == JointKind::helical;
        if (const json* v = rd.field(*j, "pitch", jp, helical)) {
          if (auto d = rd.number(*v, jp + ".pitch")) s.joint.pitch = *d;
        }
        if (const json* v = rd.field(*j, "frame", jp, false)) {
          const std::string f = v->is_string() ? v->get<std::string>() : "";
          if (f == "spatial") {
            s.joint.frame = AxisFrame::spatial;
          } else if (f == "body") {
            s.joint.frame = AxisFrame::body;
          } else {
            rd.error(jp + ".frame", "expected \"spatial\" or \"body\"");
          }
        }
        if (const json* v = rd.field(*j, "screw_spatial", jp, false)) {
          cc.spatial = rd.vec<6>(*v, jp + ".screw_spatial");
        }
        if (const json* v = rd.field(*j, "screw_body", jp, false)) {
          cc.body_screw = rd.vec<6>(*v, jp + ".screw_body");
        }
      }
      specs.push_back(s);
      checks.push_back(cc);
    }
  }
  if (!rd.diags.empty()) throw ModelError(rd.diags);

  ChainModel model = ChainModel::build(name, gravity, std::move(specs));
  for (const CrossCheck& cc : checks) {
    const std::string jp = "bodies[" + std::to_string(cc.body) + "].joint";
    if (cc.spatial &&
        (*cc.spatial - model.screw_spatial(cc.body).vec()).norm() > 1e-9) {
      rd.error(jp + ".screw_spatial",
               "inconsistent with the screw derived from axis and point");
    }
    if (cc.body_screw &&
        (*cc.body_screw - model.screw_body(cc.body).vec()).norm() > 1e-9) {
      rd.error(jp + ".screw_body",
               "inconsistent with the screw derived from axis and point");
    }
  }
  if (!rd.diags.empty()) throw ModelError(rd.diags);
  return model;
}

ChainModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open model file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

std::string serialize_model(const ChainModel& model) {
  json doc;
  doc["name"] = model.name();
  doc["gravity"] = to_json(model.gravity());
  json bodies = json::array();
  for (int i = 0; i < model.n(); ++i) {
    const BodySpec& s = model.spec(i);
    json b;
    b["parent"] = s.parent + 1;
    b["mass"] = s.body.mass;
    b["com"] = to_json(s.body.com);
    b["inertia_com"] = to_json(s.body.inertia_com);
    b["ref_pose"] = {{"rotation", to_json(s.body.ref_pose.R())},
                     {"translation", to_json(s.body.ref_pose.trans)}};
    json j;
    j["type"] = to_string(s.joint.kind);
    j["axis"] = to_json(s.joint.axis);
    j["point"] = to_json(s.joint.point);
    if (s.joint.kind == JointKind::helical) j["pitch"] = s.joint.pitch;
    j["frame"] = s.joint.frame == AxisFrame::spatial ? "spatial" : "body";
    b["joint"] = j;
    bodies.push_back(b);
  }
  doc["bodies"] = bodies;
  return doc.dump(2) + "\n";
}

}  // namespace screwdyn
