#include "reqforge/validate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace reqforge {

namespace {

std::string quoted(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '\'';
  out += s;
  out += '\'';
  return out;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  });
}

class Validator {
 public:
  Validator(const Model& model, ValidateOptions options)
      : model_(model), options_(options), index_(model) {}

  std::vector<Diagnostic> run() {
    check_elements();
    check_traces();
    check_satisfies();
    check_component_references();
    if (options_.relaxed_levels) check_trace_cycles();
    sort_diagnostics(diagnostics_);
    return std::move(diagnostics_);
  }

 private:
  void error(std::string code, std::string message, std::string subject,
             const std::optional<SourceSpan>& span) {
    diagnostics_.push_back(
        make_error(std::move(code), std::move(message), std::move(subject),
                   span));
  }

  void warning(std::string code, std::string message, std::string subject,
               const std::optional<SourceSpan>& span) {
    diagnostics_.push_back(
        make_warning(std::move(code), std::move(message), std::move(subject),
                     span));
  }

  void register_id(const std::string& id,
                   const std::optional<SourceSpan>& span) {
    if (!is_valid_identifier(id)) {
      error("E005", "malformed identifier " + quoted(id), id, span);
    }
    if (!seen_.insert(id).second) {
      error("E001", "duplicate identifier " + quoted(id), id, span);
    }
  }

  void check_component(const Component& component,
                       std::vector<std::string>& ancestors) {
    const bool self_nested =
        std::find(ancestors.begin(), ancestors.end(), component.id) !=
        ancestors.end();
    if (self_nested) {
      // Containment cycle: the id reappears below itself. Reported as
      // E014, not as a duplicate.
      error("E014",
            "component " + quoted(component.id) + " is nested inside itself",
            component.id, component.span);
    } else {
      register_id(component.id, component.span);
    }
    ancestors.push_back(component.id);
    for (const auto& sub : component.sub_components) {
      check_component(sub, ancestors);
    }
    ancestors.pop_back();
  }

  void check_elements() {
    for (const auto& container : model_.containers) {
      register_id(container.id, container.span);
      if (container.requirements.empty()) {
        warning("W001", "container " + quoted(container.id) + " is empty",
                container.id, container.span);
      }
      for (const auto& req : container.requirements) {
        register_id(req.id, req.span);
        if (is_blank(req.definition)) {
          error("E004",
                "requirement " + quoted(req.id) + " has an empty definition",
                req.id, req.span);
        }
      }
    }
    for (const auto& package : model_.packages) {
      register_id(package.id, package.span);
      if (package.components.empty() && package.interfaces.empty() &&
          package.nodes.empty()) {
        warning("W001", "package " + quoted(package.id) + " is empty",
                package.id, package.span);
      }
      std::vector<std::string> ancestors;
      for (const auto& component : package.components) {
        check_component(component, ancestors);
      }
      for (const auto& iface : package.interfaces) {
        register_id(iface.id, iface.span);
      }
      for (const auto& node : package.nodes) {
        register_id(node.id, node.span);
      }
    }
  }

  // Returns true when `id` resolves to a requirement; reports E002/E003
  // otherwise.
  bool require_requirement(const std::string& id, std::string_view role,
                           const std::optional<SourceSpan>& span) {
    auto ref = index_.find(id);
    if (!ref) {
      error("E002",
            std::string(role) + " " + quoted(id) + " does not resolve", id,
            span);
      return false;
    }
    if (!std::holds_alternative<const Requirement*>(*ref)) {
      error("E003",
            std::string(role) + " " + quoted(id) + " is not a requirement",
            id, span);
      return false;
    }
    return true;
  }

  void check_traces() {
    std::set<std::pair<std::string, std::string>> seen_links;
    for (const auto& trace : model_.traces) {
      const bool src_ok =
          require_requirement(trace.source, "trace source", trace.span);
      const bool dst_ok =
          require_requirement(trace.target, "trace target", trace.span);
      if (!seen_links.insert({trace.source, trace.target}).second) {
        error("E012",
              "duplicate trace link " + quoted(trace.source) + " -> " +
                  quoted(trace.target),
              trace.source, trace.span);
      }
      if (!src_ok || !dst_ok || options_.relaxed_levels) continue;
      auto src_level = index_.level_of(trace.source);
      auto dst_level = index_.level_of(trace.target);
      if (!src_level || !dst_level) continue;
      if (!(static_cast<int>(*src_level) < static_cast<int>(*dst_level))) {
        error("E010",
              "trace " + quoted(trace.source) + " -> " + quoted(trace.target) +
                  " violates the level order (" +
                  std::string(to_string(*src_level)) + " -> " +
                  std::string(to_string(*dst_level)) + ")",
              trace.source, trace.span);
      }
    }
  }

  void check_satisfies() {
    std::set<std::pair<std::string, std::string>> seen_links;
    for (const auto& link : model_.satisfies) {
      auto src = index_.find(link.source);
      if (!src) {
        error("E002",
              "satisfy source " + quoted(link.source) + " does not resolve",
              link.source, link.span);
      } else if (!std::holds_alternative<const Component*>(*src)) {
        error("E003",
              "satisfy source " + quoted(link.source) + " is not a component",
              link.source, link.span);
      }
      require_requirement(link.target, "satisfy target", link.span);
      if (!seen_links.insert({link.source, link.target}).second) {
        error("E013",
              "duplicate satisfy link " + quoted(link.source) + " -> " +
                  quoted(link.target),
              link.source, link.span);
      }
    }
  }

  void check_component_references() {
    for (const auto& entry : index_.components()) {
      const Component& c = *entry.component;
      for (const auto& id : c.provided) {
        check_ref<Interface>(id, "provided interface", "an interface",
                             c.span);
      }
      for (const auto& id : c.consumed) {
        check_ref<Interface>(id, "consumed interface", "an interface",
                             c.span);
      }
      for (const auto& id : c.deployed_on) {
        check_ref<Node>(id, "deployment node", "a node", c.span);
      }
    }
  }

  template <class Expected>
  void check_ref(const std::string& id, std::string_view role,
                 std::string_view expected_kind,
                 const std::optional<SourceSpan>& span) {
    auto ref = index_.find(id);
    if (!ref) {
      error("E002",
            std::string(role) + " " + quoted(id) + " does not resolve", id,
            span);
    } else if (!std::holds_alternative<const Expected*>(*ref)) {
      error("E003",
            std::string(role) + " " + quoted(id) + " is not " +
                std::string(expected_kind),
            id, span);
    }
  }

  // Kosaraju over the requirement trace graph; each strongly connected
  // component with more than one member, or with a self loop, is one
  // cycle diagnostic.
  void check_trace_cycles() {
    std::vector<std::string> ids;
    std::map<std::string, int, std::less<>> id_index;
    for (const auto& entry : index_.requirements()) {
      id_index.emplace(entry.requirement->id, static_cast<int>(ids.size()));
      ids.push_back(entry.requirement->id);
    }

    const int n = static_cast<int>(ids.size());
    std::vector<std::vector<int>> fwd(n), rev(n);
    std::vector<bool> self_loop(n, false);
    for (const auto& trace : model_.traces) {
      auto s = id_index.find(trace.source);
      auto t = id_index.find(trace.target);
      if (s == id_index.end() || t == id_index.end()) continue;
      if (index_.requirement(trace.source) == nullptr ||
          index_.requirement(trace.target) == nullptr) {
        continue;  // dangling or wrong-kind links already reported
      }
      if (s->second == t->second) self_loop[s->second] = true;
      fwd[s->second].push_back(t->second);
      rev[t->second].push_back(s->second);
    }

    std::vector<int> order;
    order.reserve(n);
    std::vector<char> visited(n, 0);
    for (int start = 0; start < n; ++start) {
      if (visited[start]) continue;
      // Iterative post-order.
      std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
      visited[start] = 1;
      while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < fwd[v].size()) {
          int next = fwd[v][i++];
          if (!visited[next]) {
            visited[next] = 1;
            stack.push_back({next, 0});
          }
        } else {
          order.push_back(v);
          stack.pop_back();
        }
      }
    }

    std::vector<int> scc(n, -1);
    int scc_count = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (scc[*it] != -1) continue;
      std::vector<int> stack{*it};
      scc[*it] = scc_count;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int next : rev[v]) {
          if (scc[next] == -1) {
            scc[next] = scc_count;
            stack.push_back(next);
          }
        }
      }
      ++scc_count;
    }

    std::vector<std::vector<int>> members(scc_count);
    for (int v = 0; v < n; ++v) members[scc[v]].push_back(v);
    for (const auto& group : members) {
      const bool cyclic =
          group.size() > 1 || (group.size() == 1 && self_loop[group[0]]);
      if (!cyclic) continue;
      std::vector<std::string> names;
      names.reserve(group.size());
      for (int v : group) names.push_back(ids[v]);
      std::sort(names.begin(), names.end());
      std::string message = "trace cycle involving: ";
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) message += ", ";
        message += names[i];
      }
      // Anchor the diagnostic at the first declared link inside the cycle.
      std::optional<SourceSpan> span;
      for (const auto& trace : model_.traces) {
        if (std::find(names.begin(), names.end(), trace.source) !=
                names.end() &&
            std::find(names.begin(), names.end(), trace.target) !=
                names.end()) {
          span = trace.span;
          break;
        }
      }
      error("E011", std::move(message), names.front(), span);
    }
  }

  const Model& model_;
  ValidateOptions options_;
  ModelIndex index_;
  std::set<std::string, std::less<>> seen_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

std::vector<Diagnostic> validate(const Model& model, ValidateOptions options) {
  return Validator(model, options).run();
}

}  // namespace reqforge
