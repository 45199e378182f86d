#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "reqforge/diagnostics.hpp"

namespace reqforge {

/// Requirement level, ordered along the tracing direction: tool
/// requirements trace to framework requirements, which trace to case
/// study requirements. Also used as the container kind.
enum class Level { tool, framework, case_study };

enum class Criticality { low, medium, high };

/// Project milestone at which a requirement is planned to be satisfied.
/// Totally ordered: baseline < initial < intermediate < final.
enum class Release { baseline, initial, intermediate, final };

enum class Status { planned, in_progress, done, postponed, cancelled };

std::string_view to_string(Level v);
std::string_view to_string(Criticality v);
std::string_view to_string(Release v);
std::string_view to_string(Status v);

std::optional<Level> level_from_string(std::string_view s);
std::optional<Criticality> criticality_from_string(std::string_view s);
std::optional<Release> release_from_string(std::string_view s);
std::optional<Status> status_from_string(std::string_view s);

/// True iff text matches [A-Za-z][A-Za-z0-9_]*(-[A-Za-z0-9]+)*.
bool is_valid_identifier(std::string_view text);

struct Requirement {
  std::string id;
  std::string definition;
  Criticality criticality = Criticality::medium;
  Release release = Release::baseline;
  Status status = Status::planned;
  std::string comments;  // empty means absent
  std::optional<SourceSpan> span;
};

/// Groups requirements of one level. A requirement's level is its
/// container's kind.
struct RequirementsContainer {
  std::string id;
  std::string name;
  Level kind = Level::tool;
  std::string owner;  // responsible partner; empty means absent
  std::vector<Requirement> requirements;
  std::optional<SourceSpan> span;
};

/// Dependency from a requirement to the higher-level requirement it
/// supports.
struct TraceLink {
  std::string source;
  std::string target;
  std::optional<SourceSpan> span;
};

/// Declaration that a component realizes a requirement.
struct SatisfyLink {
  std::string source;  // component
  std::string target;  // requirement
  std::optional<SourceSpan> span;
};

struct Interface {
  std::string id;
  std::string name;
  std::string description;  // empty means absent
  std::optional<SourceSpan> span;
};

/// Deployment platform (e.g. Eclipse RCP, a Java virtual machine).
struct Node {
  std::string id;
  std::string name;
  std::string description;
  std::optional<SourceSpan> span;
};

struct Component {
  std::string id;
  std::string name;
  std::string owner;
  std::vector<Component> sub_components;
  std::vector<std::string> provided;     // interface ids
  std::vector<std::string> consumed;     // interface ids
  std::vector<std::string> deployed_on;  // node ids
  std::optional<SourceSpan> span;
};

/// Groups related components, common interfaces and platform nodes.
struct Package {
  std::string id;
  std::string name;
  std::vector<Component> components;
  std::vector<Interface> interfaces;
  std::vector<Node> nodes;
  std::optional<SourceSpan> span;
};

/// Root aggregate. Immutable after load; all operations are pure
/// functions of the model and may run concurrently on a shared snapshot.
struct Model {
  std::string name;
  std::vector<RequirementsContainer> containers;
  std::vector<Package> packages;
  std::vector<TraceLink> traces;
  std::vector<SatisfyLink> satisfies;
};

/// Semantic equality, ignoring source spans. Used by round-trip tests.
bool structurally_equal(const Requirement& a, const Requirement& b);
bool structurally_equal(const RequirementsContainer& a,
                        const RequirementsContainer& b);
bool structurally_equal(const Interface& a, const Interface& b);
bool structurally_equal(const Node& a, const Node& b);
bool structurally_equal(const Component& a, const Component& b);
bool structurally_equal(const Package& a, const Package& b);
bool structurally_equal(const Model& a, const Model& b);

using ElementRef =
    std::variant<const RequirementsContainer*, const Requirement*,
                 const Package*, const Component*, const Interface*,
                 const Node*>;

/// Returns the id of the element a reference points at.
std::string_view id_of(const ElementRef& ref);

/// Finds the element bearing `id`, walking containers before packages in
/// declaration order. With duplicate ids (an invalid model) the first
/// occurrence wins, so the result is deterministic either way.
std::optional<ElementRef> resolve(const Model& model, std::string_view id);

/// Id lookup table over an immutable model. Holds pointers into the
/// model, which must outlive the index.
class ModelIndex {
 public:
  struct RequirementEntry {
    const Requirement* requirement;
    const RequirementsContainer* container;
  };
  struct ComponentEntry {
    const Component* component;
    const Package* package;
    const Component* parent;  // null for top-level components
  };

  explicit ModelIndex(const Model& model);

  std::optional<ElementRef> find(std::string_view id) const;
  const Requirement* requirement(std::string_view id) const;
  const Component* component(std::string_view id) const;
  const Interface* interface(std::string_view id) const;
  const Node* node(std::string_view id) const;
  const Package* package(std::string_view id) const;
  const RequirementsContainer* container(std::string_view id) const;

  /// Container holding the requirement, or null if id is not a requirement.
  const RequirementsContainer* container_of(std::string_view req_id) const;
  std::optional<Level> level_of(std::string_view req_id) const;

  /// All requirements in declaration order (containers, then rows).
  const std::vector<RequirementEntry>& requirements() const {
    return requirements_;
  }
  /// All components in pre-order (parents before sub-components).
  const std::vector<ComponentEntry>& components() const {
    return components_;
  }

 private:
  std::map<std::string, ElementRef, std::less<>> by_id_;
  std::map<std::string, const RequirementsContainer*, std::less<>>
      container_by_req_;
  std::vector<RequirementEntry> requirements_;
  std::vector<ComponentEntry> components_;
};

/// Folds several models into one: containers, packages and links are
/// concatenated in order; the name comes from the first part with a
/// non-empty one.
Model merge_models(std::vector<Model> parts);

/// Keeps only the top-level elements whose span names `file`. Used to
/// rewrite one file of a multi-file model.
Model filter_model_by_file(const Model& model, std::string_view file);

}  // namespace reqforge
