#include "reqforge/model.hpp"

#include <algorithm>
#include <cctype>

namespace reqforge {

std::string_view to_string(Level v) {
  switch (v) {
    case Level::tool: return "tool";
    case Level::framework: return "framework";
    case Level::case_study: return "case_study";
  }
  return "tool";
}

std::string_view to_string(Criticality v) {
  switch (v) {
    case Criticality::low: return "low";
    case Criticality::medium: return "medium";
    case Criticality::high: return "high";
  }
  return "low";
}

std::string_view to_string(Release v) {
  switch (v) {
    case Release::baseline: return "baseline";
    case Release::initial: return "initial";
    case Release::intermediate: return "intermediate";
    case Release::final: return "final";
  }
  return "baseline";
}

std::string_view to_string(Status v) {
  switch (v) {
    case Status::planned: return "planned";
    case Status::in_progress: return "in_progress";
    case Status::done: return "done";
    case Status::postponed: return "postponed";
    case Status::cancelled: return "cancelled";
  }
  return "planned";
}

std::optional<Level> level_from_string(std::string_view s) {
  if (s == "tool") return Level::tool;
  if (s == "framework") return Level::framework;
  if (s == "case_study") return Level::case_study;
  return std::nullopt;
}

std::optional<Criticality> criticality_from_string(std::string_view s) {
  if (s == "low") return Criticality::low;
  if (s == "medium") return Criticality::medium;
  if (s == "high") return Criticality::high;
  return std::nullopt;
}

std::optional<Release> release_from_string(std::string_view s) {
  if (s == "baseline") return Release::baseline;
  if (s == "initial") return Release::initial;
  if (s == "intermediate") return Release::intermediate;
  if (s == "final") return Release::final;
  return std::nullopt;
}

std::optional<Status> status_from_string(std::string_view s) {
  if (s == "planned") return Status::planned;
  if (s == "in_progress") return Status::in_progress;
  if (s == "done") return Status::done;
  if (s == "postponed") return Status::postponed;
  if (s == "cancelled") return Status::cancelled;
  return std::nullopt;
}

bool is_valid_identifier(std::string_view text) {
  auto is_alpha = [](unsigned char c) { return std::isalpha(c) != 0; };
  auto is_alnum = [](unsigned char c) { return std::isalnum(c) != 0; };

  std::size_t i = 0;
  if (text.empty() || !is_alpha(text[0])) return false;
  ++i;
  while (i < text.size() &&
         (is_alnum(text[i]) || text[i] == '_')) {
    ++i;
  }
  // Optional dash-separated groups of alphanumerics.
  while (i < text.size()) {
    if (text[i] != '-') return false;
    ++i;
    if (i >= text.size() || !is_alnum(text[i])) return false;
    while (i < text.size() && is_alnum(text[i])) ++i;
  }
  return true;
}

bool structurally_equal(const Requirement& a, const Requirement& b) {
  return a.id == b.id && a.definition == b.definition &&
         a.criticality == b.criticality && a.release == b.release &&
         a.status == b.status && a.comments == b.comments;
}

bool structurally_equal(const RequirementsContainer& a,
                        const RequirementsContainer& b) {
  return a.id == b.id && a.name == b.name && a.kind == b.kind &&
         a.owner == b.owner &&
         std::equal(a.requirements.begin(), a.requirements.end(),
                    b.requirements.begin(), b.requirements.end(),
                    [](const Requirement& x, const Requirement& y) {
                      return structurally_equal(x, y);
                    });
}

bool structurally_equal(const Interface& a, const Interface& b) {
  return a.id == b.id && a.name == b.name && a.description == b.description;
}

bool structurally_equal(const Node& a, const Node& b) {
  return a.id == b.id && a.name == b.name && a.description == b.description;
}

bool structurally_equal(const Component& a, const Component& b) {
  return a.id == b.id && a.name == b.name && a.owner == b.owner &&
         a.provided == b.provided && a.consumed == b.consumed &&
         a.deployed_on == b.deployed_on &&
         std::equal(a.sub_components.begin(), a.sub_components.end(),
                    b.sub_components.begin(), b.sub_components.end(),
                    [](const Component& x, const Component& y) {
                      return structurally_equal(x, y);
                    });
}

bool structurally_equal(const Package& a, const Package& b) {
  auto eq = [](const auto& xs, const auto& ys) {
    return std::equal(xs.begin(), xs.end(), ys.begin(), ys.end(),
                      [](const auto& x, const auto& y) {
                        return structurally_equal(x, y);
                      });
  };
  return a.id == b.id && a.name == b.name && eq(a.components, b.components) &&
         eq(a.interfaces, b.interfaces) && eq(a.nodes, b.nodes);
}

namespace {

bool links_equal(const std::vector<TraceLink>& a,
                 const std::vector<TraceLink>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const TraceLink& x, const TraceLink& y) {
                      return x.source == y.source && x.target == y.target;
                    });
}

bool links_equal(const std::vector<SatisfyLink>& a,
                 const std::vector<SatisfyLink>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const SatisfyLink& x, const SatisfyLink& y) {
                      return x.source == y.source && x.target == y.target;
                    });
}

}  // namespace

bool structurally_equal(const Model& a, const Model& b) {
  auto eq = [](const auto& xs, const auto& ys) {
    return std::equal(xs.begin(), xs.end(), ys.begin(), ys.end(),
                      [](const auto& x, const auto& y) {
                        return structurally_equal(x, y);
                      });
  };
  return a.name == b.name && eq(a.containers, b.containers) &&
         eq(a.packages, b.packages) && links_equal(a.traces, b.traces) &&
         links_equal(a.satisfies, b.satisfies);
}

std::string_view id_of(const ElementRef& ref) {
  return std::visit([](const auto* e) -> std::string_view { return e->id; },
                    ref);
}

std::optional<ElementRef> resolve(const Model& model, std::string_view id) {
  ModelIndex index(model);
  return index.find(id);
}

ModelIndex::ModelIndex(const Model& model) {
  auto add = [this](const std::string& id, ElementRef ref) {
    by_id_.emplace(id, ref);  // first occurrence wins
  };

  for (const auto& container : model.containers) {
    add(container.id, &container);
    for (const auto& req : container.requirements) {
      add(req.id, &req);
      container_by_req_.emplace(req.id, &container);
      requirements_.push_back({&req, &container});
    }
  }

  for (const auto& package : model.packages) {
    add(package.id, &package);
    // Pre-order walk of the component trees.
    struct Frame {
      const Component* component;
      const Component* parent;
    };
    std::vector<Frame> stack;
    for (auto it = package.components.rbegin();
         it != package.components.rend(); ++it) {
      stack.push_back({&*it, nullptr});
    }
    while (!stack.empty()) {
      Frame frame = stack.back();
      stack.pop_back();
      add(frame.component->id, frame.component);
      components_.push_back({frame.component, &package, frame.parent});
      for (auto it = frame.component->sub_components.rbegin();
           it != frame.component->sub_components.rend(); ++it) {
        stack.push_back({&*it, frame.component});
      }
    }
    for (const auto& iface : package.interfaces) add(iface.id, &iface);
    for (const auto& node : package.nodes) add(node.id, &node);
  }
}

std::optional<ElementRef> ModelIndex::find(std::string_view id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

namespace {

template <class T>
const T* find_as(const std::optional<ElementRef>& ref) {
  if (!ref) return nullptr;
  if (const auto* const* p = std::get_if<const T*>(&*ref)) return *p;
  return nullptr;
}

}  // namespace

const Requirement* ModelIndex::requirement(std::string_view id) const {
  return find_as<Requirement>(find(id));
}

const Component* ModelIndex::component(std::string_view id) const {
  return find_as<Component>(find(id));
}

const Interface* ModelIndex::interface(std::string_view id) const {
  return find_as<Interface>(find(id));
}

const Node* ModelIndex::node(std::string_view id) const {
  return find_as<Node>(find(id));
}

const Package* ModelIndex::package(std::string_view id) const {
  return find_as<Package>(find(id));
}

const RequirementsContainer* ModelIndex::container(std::string_view id) const {
  return find_as<RequirementsContainer>(find(id));
}

const RequirementsContainer* ModelIndex::container_of(
    std::string_view req_id) const {
  auto it = container_by_req_.find(req_id);
  return it == container_by_req_.end() ? nullptr : it->second;
}

std::optional<Level> ModelIndex::level_of(std::string_view req_id) const {
  const auto* container = container_of(req_id);
  if (!container) return std::nullopt;
  return container->kind;
}

Model merge_models(std::vector<Model> parts) {
  Model merged;
  for (auto& part : parts) {
    if (merged.name.empty()) merged.name = part.name;
    std::move(part.containers.begin(), part.containers.end(),
              std::back_inserter(merged.containers));
    std::move(part.packages.begin(), part.packages.end(),
              std::back_inserter(merged.packages));
    std::move(part.traces.begin(), part.traces.end(),
              std::back_inserter(merged.traces));
    std::move(part.satisfies.begin(), part.satisfies.end(),
              std::back_inserter(merged.satisfies));
  }
  return merged;
}

Model filter_model_by_file(const Model& model, std::string_view file) {
  auto from_file = [&](const auto& element) {
    return element.span && element.span->file == file;
  };

  Model out;
  out.name = model.name;
  for (const auto& c : model.containers) {
    if (from_file(c)) out.containers.push_back(c);
  }
  for (const auto& p : model.packages) {
    if (from_file(p)) out.packages.push_back(p);
  }
  for (const auto& t : model.traces) {
    if (from_file(t)) out.traces.push_back(t);
  }
  for (const auto& s : model.satisfies) {
    if (from_file(s)) out.satisfies.push_back(s);
  }
  return out;
}

}  // namespace reqforge
