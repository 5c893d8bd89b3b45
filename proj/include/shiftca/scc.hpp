#ifndef SHIFTCA_SCC_HPP
#define SHIFTCA_SCC_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

namespace shiftca {

/// Iterative Tarjan. Returns the component id of every node; ids are in
/// reverse topological order of the condensation.
inline std::vector<std::size_t> strongly_connected_components(const std::vector<std::vector<std::size_t>> &adj)
{
	constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
	const std::size_t n = adj.size();
	std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset);
	std::vector<bool> on_stack(n, false);
	std::vector<std::size_t> stack;
	std::vector<std::pair<std::size_t, std::size_t>> call; // node, next edge
	std::size_t counter = 0, components = 0;

	for (std::size_t root = 0; root < n; ++root) {
		if (index[root] != unset)
			continue;
		call.emplace_back(root, 0);
		while (!call.empty()) {
			auto &[v, edge] = call.back();
			if (edge == 0 && index[v] == unset) {
				index[v] = low[v] = counter++;
				stack.push_back(v);
				on_stack[v] = true;
			}
			if (edge < adj[v].size()) {
				const std::size_t w = adj[v][edge++];
				if (index[w] == unset)
					call.emplace_back(w, 0);
				else if (on_stack[w])
					low[v] = std::min(low[v], index[w]);
				continue;
			}
			if (low[v] == index[v]) {
				std::size_t w;
				do {
					w = stack.back();
					stack.pop_back();
					on_stack[w] = false;
					comp[w] = components;
				} while (w != v);
				++components;
			}
			const std::size_t done = v;
			call.pop_back();
			if (!call.empty())
				low[call.back().first] = std::min(low[call.back().first], low[done]);
		}
	}
	return comp;
}

/// Nodes lying on some directed cycle (nontrivial component or self-loop).
inline std::vector<bool> nodes_on_cycles(const std::vector<std::vector<std::size_t>> &adj)
{
	const auto comp = strongly_connected_components(adj);
	std::vector<std::size_t> comp_size(adj.size(), 0);
	for (std::size_t c : comp)
		++comp_size[c];
	std::vector<bool> out(adj.size(), false);
	for (std::size_t v = 0; v < adj.size(); ++v) {
		out[v] = comp_size[comp[v]] > 1 ||
		         std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
	}
	return out;
}

} // namespace shiftca

#endif
