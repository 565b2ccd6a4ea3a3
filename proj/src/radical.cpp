#include "ramified/radical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "ramified/error.hpp"

namespace ramified {

namespace {

std::shared_ptr<const RadicalExpr::Node> make_node(RadicalKind kind)
{
  auto node = std::make_shared<RadicalExpr::Node>();
  node->kind = kind;
  return node;
}

} // namespace

RadicalExpr::RadicalExpr() : node_(make_node(RadicalKind::Rational)) {}

RadicalExpr RadicalExpr::constant(const Rational &q)
{
  auto node = std::make_shared<Node>();
  node->kind = RadicalKind::Rational;
  node->value = q;
  node->value.canonicalize();
  return RadicalExpr(std::move(node));
}

RadicalExpr RadicalExpr::imaginary_unit()
{
  return RadicalExpr(make_node(RadicalKind::ImaginaryUnit));
}

RadicalExpr RadicalExpr::variable()
{
  return RadicalExpr(make_node(RadicalKind::Variable));
}

RadicalExpr RadicalExpr::root(unsigned k, const RadicalExpr &arg)
{
  if (k < 2)
    throw Error(ErrorKind::InvalidInput, "root index must be at least 2");
  auto node = std::make_shared<Node>();
  node->kind = RadicalKind::Root;
  node->index = k;
  node->a = arg.node_;
  return RadicalExpr(std::move(node));
}

RadicalExpr RadicalExpr::make(RadicalKind kind, RadicalExpr a, RadicalExpr b)
{
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->a = std::move(a.node_);
  node->b = std::move(b.node_);
  return RadicalExpr(std::move(node));
}

RadicalKind RadicalExpr::kind() const noexcept { return node_->kind; }

const Rational &RadicalExpr::value() const
{
  if (node_->kind != RadicalKind::Rational)
    throw Error(ErrorKind::InvalidInput, "not a rational node");
  return node_->value;
}

unsigned RadicalExpr::index() const { return node_->index; }
RadicalExpr RadicalExpr::lhs() const { return RadicalExpr(node_->a); }
RadicalExpr RadicalExpr::rhs() const { return RadicalExpr(node_->b); }

RadicalExpr operator+(const RadicalExpr &a, const RadicalExpr &b)
{
  if (a.is_rational() && b.is_rational())
    return RadicalExpr::constant(a.value() + b.value());
  if (a.is_rational() && a.value() == 0)
    return b;
  if (b.is_rational() && b.value() == 0)
    return a;
  return RadicalExpr::make(RadicalKind::Add, a, b);
}

RadicalExpr operator-(const RadicalExpr &a, const RadicalExpr &b)
{
  if (a.is_rational() && b.is_rational())
    return RadicalExpr::constant(a.value() - b.value());
  if (b.is_rational() && b.value() == 0)
    return a;
  return RadicalExpr::make(RadicalKind::Sub, a, b);
}

RadicalExpr operator*(const RadicalExpr &a, const RadicalExpr &b)
{
  if (a.is_rational() && b.is_rational())
    return RadicalExpr::constant(a.value() * b.value());
  if ((a.is_rational() && a.value() == 0) || (b.is_rational() && b.value() == 0))
    return RadicalExpr::constant(0);
  if (a.is_rational() && a.value() == 1)
    return b;
  if (b.is_rational() && b.value() == 1)
    return a;
  return RadicalExpr::make(RadicalKind::Mul, a, b);
}

RadicalExpr operator/(const RadicalExpr &a, const RadicalExpr &b)
{
  if (b.is_rational() && b.value() == 0)
    throw Error(ErrorKind::DivisionByZero, "division by the constant 0");
  if (a.is_rational() && b.is_rational())
    return RadicalExpr::constant(a.value() / b.value());
  if (b.is_rational() && b.value() == 1)
    return a;
  return RadicalExpr::make(RadicalKind::Div, a, b);
}

RadicalExpr operator-(const RadicalExpr &a)
{
  if (a.is_rational())
    return RadicalExpr::constant(-a.value());
  auto node = std::make_shared<RadicalExpr::Node>();
  node->kind = RadicalKind::Neg;
  node->a = RadicalExpr(a).node_;
  return RadicalExpr(std::move(node));
}

namespace {

using NodePtr = const RadicalExpr::Node *;

struct Graph {
  std::vector<NodePtr> order;  // children before parents; the top node is last
  std::unordered_map<NodePtr, std::size_t> index;
  std::vector<std::vector<std::size_t>> children;
};

Graph build_graph(NodePtr top)
{
  Graph g;
  // Iterative post-order so deep chains do not exhaust the stack.
  std::vector<std::pair<NodePtr, bool>> stack{{top, false}};
  while (!stack.empty()) {
    auto [node, expanded] = stack.back();
    stack.pop_back();
    if (g.index.contains(node))
      continue;
    if (expanded) {
      g.index[node] = g.order.size();
      g.order.push_back(node);
      continue;
    }
    stack.push_back({node, true});
    if (node->b && !g.index.contains(node->b.get()))
      stack.push_back({node->b.get(), false});
    if (node->a && !g.index.contains(node->a.get()))
      stack.push_back({node->a.get(), false});
  }
  g.children.resize(g.order.size());
  for (std::size_t i = 0; i < g.order.size(); ++i) {
    if (g.order[i]->a)
      g.children[i].push_back(g.index.at(g.order[i]->a.get()));
    if (g.order[i]->b)
      g.children[i].push_back(g.index.at(g.order[i]->b.get()));
  }
  return g;
}

} // namespace

std::vector<unsigned> RadicalExpr::root_indices() const
{
  std::vector<unsigned> out;
  for (NodePtr n : build_graph(node_.get()).order)
    if (n->kind == RadicalKind::Root)
      out.push_back(n->index);
  return out;
}

std::size_t RadicalExpr::node_count() const
{
  return build_graph(node_.get()).order.size();
}

bool RadicalExpr::has_variable() const
{
  for (NodePtr n : build_graph(node_.get()).order)
    if (n->kind == RadicalKind::Variable)
      return true;
  return false;
}

namespace {

void print(std::ostream &os, NodePtr n)
{
  switch (n->kind) {
  case RadicalKind::Rational: os << ramified::to_string(n->value); return;
  case RadicalKind::ImaginaryUnit: os << "i"; return;
  case RadicalKind::Variable: os << "w"; return;
  case RadicalKind::Neg: os << "-("; print(os, n->a.get()); os << ")"; return;
  case RadicalKind::Root:
    os << "root" << n->index << "(";
    print(os, n->a.get());
    os << ")";
    return;
  default: break;
  }
  const char *op = n->kind == RadicalKind::Add ? " + " : n->kind == RadicalKind::Sub ? " - "
                   : n->kind == RadicalKind::Mul ? "*" : "/";
  os << "(";
  print(os, n->a.get());
  os << op;
  print(os, n->b.get());
  os << ")";
}

} // namespace

std::string RadicalExpr::to_string() const
{
  std::ostringstream os;
  print(os, node_.get());
  return os.str();
}

std::vector<Complex> dedupe_values(std::vector<Complex> values, double tolerance)
{
  std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  std::vector<Complex> kept;
  for (const Complex &v : values) {
    const double tol = tolerance * std::max(1.0, std::abs(v));
    bool duplicate = false;
    for (std::size_t j = kept.size(); j-- > 0;) {
      if (v.real() - kept[j].real() > tol)
        break;
      if (std::abs(v - kept[j]) <= tol) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate)
      kept.push_back(v);
  }
  return kept;
}

namespace {

struct Region {
  std::size_t top;
  std::vector<std::size_t> nodes;  // evaluation order, top last
  std::vector<std::size_t> choice_nodes;
  std::vector<std::size_t> radix;
};

class Evaluator {
public:
  Evaluator(const RadicalExpr &e, const EvalOptions &options, bool parallel)
    : graph_(build_graph(e.id())), options_(options), parallel_(parallel)
  {
    const std::size_t n = graph_.order.size();
    if (!options_.w)
      for (NodePtr node : graph_.order)
        if (node->kind == RadicalKind::Variable)
          throw Error(ErrorKind::InvalidInput, "expression has an unbound variable");
    leaf_values_.resize(n);
    collapsed_.assign(n, 0);
    if (options_.collapse)
      mark_collapsible();
  }

  EvalResult run()
  {
    EvalResult result;
    for (std::size_t i = 0; i < graph_.order.size(); ++i) {
      if (!collapsed_[i])
        continue;
      leaf_values_[i] = evaluate_region(i, result);
    }
    result.values = evaluate_region(graph_.order.size() - 1, result);
    if (result.values.empty() && result.failed_branches > 0)
      throw Error(ErrorKind::DivisionByZero, "every branch divides by zero or is undefined");
    return result;
  }

private:
  // A node is collapsible when it contains a Root and every node below it
  // is reachable only through it.
  void mark_collapsible()
  {
    const std::size_t n = graph_.order.size();
    std::vector<std::vector<std::size_t>> parents(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c : graph_.children[i])
        parents[c].push_back(i);

    for (std::size_t x = 0; x + 1 < n; ++x) {
      std::vector<char> inside(n, 0);
      std::vector<std::size_t> stack{x};
      inside[x] = 1;
      bool has_root = false;
      while (!stack.empty()) {
        const std::size_t y = stack.back();
        stack.pop_back();
        has_root = has_root || graph_.order[y]->kind == RadicalKind::Root;
        for (std::size_t c : graph_.children[y])
          if (!inside[c]) {
            inside[c] = 1;
            stack.push_back(c);
          }
      }
      if (!has_root)
        continue;
      bool dominated = true;
      for (std::size_t y = 0; y < n && dominated; ++y) {
        if (!inside[y] || y == x)
          continue;
        for (std::size_t p : parents[y])
          if (!inside[p]) {
            dominated = false;
            break;
          }
      }
      collapsed_[x] = dominated ? 1 : 0;
    }
  }

  Region make_region(std::size_t top) const
  {
    Region r{top, {}, {}, {}};
    std::vector<char> inside(graph_.order.size(), 0);
    std::vector<std::size_t> stack{top};
    inside[top] = 1;
    while (!stack.empty()) {
      const std::size_t y = stack.back();
      stack.pop_back();
      if (y != top && collapsed_[y])
        continue;
      for (std::size_t c : graph_.children[y])
        if (!inside[c]) {
          inside[c] = 1;
          stack.push_back(c);
        }
    }
    for (std::size_t i = 0; i < graph_.order.size(); ++i) {
      if (!inside[i])
        continue;
      r.nodes.push_back(i);
      if (i != top && collapsed_[i]) {
        r.choice_nodes.push_back(i);
        r.radix.push_back(leaf_values_[i].size());
      } else if (graph_.order[i]->kind == RadicalKind::Root) {
        r.choice_nodes.push_back(i);
        r.radix.push_back(graph_.order[i]->index);
      }
    }
    return r;
  }

  // Value of every region node in one world; false when the branch fails.
  bool evaluate_world(const Region &r, std::size_t world, std::vector<Complex> &values,
                      std::vector<std::size_t> &digit) const
  {
    for (std::size_t k = 0; k < r.choice_nodes.size(); ++k) {
      digit[r.choice_nodes[k]] = world % r.radix[k];
      world /= r.radix[k];
    }
    for (std::size_t i : r.nodes) {
      const NodePtr n = graph_.order[i];
      if (i != r.top && collapsed_[i]) {
        values[i] = leaf_values_[i][digit[i]];
        continue;
      }
      auto child = [&](std::size_t k) { return values[graph_.children[i][k]]; };
      Complex v;
      switch (n->kind) {
      case RadicalKind::Rational: v = to_double(n->value); break;
      case RadicalKind::ImaginaryUnit: v = Complex(0, 1); break;
      case RadicalKind::Variable: v = *options_.w; break;
      case RadicalKind::Add: v = child(0) + child(1); break;
      case RadicalKind::Sub: v = child(0) - child(1); break;
      case RadicalKind::Mul: v = child(0) * child(1); break;
      case RadicalKind::Div:
        if (child(1) == Complex(0, 0))
          return false;
        v = child(0) / child(1);
        break;
      case RadicalKind::Neg: v = -child(0); break;
      case RadicalKind::Root: {
        const Complex z = child(0);
        const Complex principal = z == Complex(0, 0) ? Complex(0, 0)
                                                     : std::pow(z, 1.0 / n->index);
        v = principal * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(digit[i]) /
                                          static_cast<double>(n->index));
        break;
      }
      }
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        return false;
      values[i] = v;
    }
    return true;
  }

  std::vector<Complex> evaluate_region(std::size_t top, EvalResult &result)
  {
    const Region r = make_region(top);
    std::size_t worlds = 1;
    for (std::size_t k : r.radix) {
      if (k == 0)
        return {};
      if (worlds > options_.max_worlds / k)
        throw Error(ErrorKind::BranchLimit, "radical expression exceeds the branch limit");
      worlds *= k;
    }
    result.worlds += worlds;

    const std::size_t n = graph_.order.size();
    std::vector<Complex> out(worlds);
    std::vector<char> ok(worlds, 0);
    if (parallel_) {
#pragma omp parallel
      {
        std::vector<Complex> values(n);
        std::vector<std::size_t> digit(n, 0);
#pragma omp for schedule(static)
        for (std::ptrdiff_t w = 0; w < static_cast<std::ptrdiff_t>(worlds); ++w) {
          if (evaluate_world(r, static_cast<std::size_t>(w), values, digit)) {
            out[w] = values[top];
            ok[w] = 1;
          }
        }
      }
    } else {
      std::vector<Complex> values(n);
      std::vector<std::size_t> digit(n, 0);
      for (std::size_t w = 0; w < worlds; ++w)
        if (evaluate_world(r, w, values, digit)) {
          out[w] = values[top];
          ok[w] = 1;
        }
    }

    std::vector<Complex> kept;
    for (std::size_t w = 0; w < worlds; ++w) {
      if (ok[w])
        kept.push_back(out[w]);
      else
        ++result.failed_branches;
    }
    return dedupe_values(std::move(kept), options_.tolerance);
  }

  Graph graph_;
  EvalOptions options_;
  bool parallel_;
  std::vector<std::vector<Complex>> leaf_values_;
  std::vector<char> collapsed_;
};

} // namespace

EvalResult eval_multi(const RadicalExpr &e, const EvalOptions &options)
{
  return Evaluator(e, options, true).run();
}

EvalResult eval_multi_serial(const RadicalExpr &e, const EvalOptions &options)
{
  return Evaluator(e, options, false).run();
}

} // namespace ramified
