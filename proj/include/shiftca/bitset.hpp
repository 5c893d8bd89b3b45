#ifndef SHIFTCA_BITSET_HPP
#define SHIFTCA_BITSET_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace shiftca {

namespace detail {

inline std::size_t blocks_for(std::size_t bits) { return (bits + 63) / 64; }

inline std::size_t hash_blocks(std::span<const std::uint64_t> blocks)
{
	// splitmix-style mixing, stable across platforms with 64-bit size_t
	std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ blocks.size();
	for (std::uint64_t b : blocks) {
		h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
		h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
		h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
		h ^= h >> 31;
	}
	return static_cast<std::size_t>(h);
}

} // namespace detail

/// Fixed-universe set of graph vertices.
class VertexSet {
public:
	VertexSet() = default;
	explicit VertexSet(std::size_t universe) : size_(universe), blocks_(detail::blocks_for(universe), 0) {}

	static VertexSet full(std::size_t universe)
	{
		VertexSet s(universe);
		for (std::size_t v = 0; v < universe; ++v)
			s.insert(v);
		return s;
	}

	std::size_t universe() const { return size_; }

	void insert(std::size_t v) { blocks_[v / 64] |= std::uint64_t{1} << (v % 64); }
	void erase(std::size_t v) { blocks_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
	bool contains(std::size_t v) const { return (blocks_[v / 64] >> (v % 64)) & 1U; }

	bool empty() const
	{
		return std::all_of(blocks_.begin(), blocks_.end(), [](std::uint64_t b) { return b == 0; });
	}

	std::size_t count() const
	{
		std::size_t n = 0;
		for (std::uint64_t b : blocks_)
			n += static_cast<std::size_t>(std::popcount(b));
		return n;
	}

	bool intersects(const VertexSet &o) const
	{
		for (std::size_t i = 0; i < blocks_.size(); ++i)
			if (blocks_[i] & o.blocks_[i])
				return true;
		return false;
	}

	bool subset_of(const VertexSet &o) const
	{
		for (std::size_t i = 0; i < blocks_.size(); ++i)
			if (blocks_[i] & ~o.blocks_[i])
				return false;
		return true;
	}

	VertexSet &operator|=(const VertexSet &o)
	{
		for (std::size_t i = 0; i < blocks_.size(); ++i)
			blocks_[i] |= o.blocks_[i];
		return *this;
	}

	VertexSet &operator&=(const VertexSet &o)
	{
		for (std::size_t i = 0; i < blocks_.size(); ++i)
			blocks_[i] &= o.blocks_[i];
		return *this;
	}

	friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
	friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }

	template <typename F>
	void for_each(F &&f) const
	{
		for (std::size_t i = 0; i < blocks_.size(); ++i) {
			std::uint64_t b = blocks_[i];
			while (b) {
				const int bit = std::countr_zero(b);
				f(i * 64 + static_cast<std::size_t>(bit));
				b &= b - 1;
			}
		}
	}

	std::vector<std::size_t> elements() const
	{
		std::vector<std::size_t> out;
		for_each([&](std::size_t v) { out.push_back(v); });
		return out;
	}

	std::span<const std::uint64_t> blocks() const { return blocks_; }

	friend bool operator==(const VertexSet &, const VertexSet &) = default;

	/// Orders by the sorted element list, so {0} < {0,1} < {1}.
	friend bool operator<(const VertexSet &a, const VertexSet &b)
	{
		const auto ea = a.elements();
		const auto eb = b.elements();
		return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
	}

private:
	std::size_t size_ = 0;
	std::vector<std::uint64_t> blocks_;
};

/// Boolean V x V matrix; row v holds the targets reachable from v.
class Relation {
public:
	Relation() = default;
	explicit Relation(std::size_t n) : n_(n), stride_(detail::blocks_for(n)), bits_(n * stride_, 0) {}

	static Relation identity(std::size_t n)
	{
		Relation r(n);
		for (std::size_t v = 0; v < n; ++v)
			r.set(v, v);
		return r;
	}

	std::size_t size() const { return n_; }

	void set(std::size_t from, std::size_t to) { bits_[from * stride_ + to / 64] |= std::uint64_t{1} << (to % 64); }
	bool test(std::size_t from, std::size_t to) const
	{
		return (bits_[from * stride_ + to / 64] >> (to % 64)) & 1U;
	}

	bool row_empty(std::size_t from) const
	{
		for (std::size_t i = 0; i < stride_; ++i)
			if (bits_[from * stride_ + i])
				return false;
		return true;
	}

	bool row_intersects(std::size_t from, const VertexSet &s) const
	{
		const auto sb = s.blocks();
		for (std::size_t i = 0; i < stride_; ++i)
			if (bits_[from * stride_ + i] & sb[i])
				return true;
		return false;
	}

	bool empty() const
	{
		return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t b) { return b == 0; });
	}

	/// Vertices with at least one outgoing pair.
	VertexSet domain() const
	{
		VertexSet d(n_);
		for (std::size_t v = 0; v < n_; ++v)
			if (!row_empty(v))
				d.insert(v);
		return d;
	}

	/// Boolean product: (this ∘ next)(v, w) iff ∃ x: this(v, x) and next(x, w).
	Relation then(const Relation &next) const
	{
		Relation out(n_);
		for (std::size_t v = 0; v < n_; ++v) {
			std::uint64_t *dst = &out.bits_[v * stride_];
			for (std::size_t i = 0; i < stride_; ++i) {
				std::uint64_t b = bits_[v * stride_ + i];
				while (b) {
					const std::size_t x = i * 64 + static_cast<std::size_t>(std::countr_zero(b));
					const std::uint64_t *src = &next.bits_[x * stride_];
					for (std::size_t k = 0; k < stride_; ++k)
						dst[k] |= src[k];
					b &= b - 1;
				}
			}
		}
		return out;
	}

	/// Vertices with an outgoing pair landing in `targets`.
	VertexSet preimage(const VertexSet &targets) const
	{
		VertexSet out(n_);
		for (std::size_t v = 0; v < n_; ++v)
			if (row_intersects(v, targets))
				out.insert(v);
		return out;
	}

	/// Union of rows of the vertices in `sources`.
	VertexSet image(const VertexSet &sources) const
	{
		VertexSet out(n_);
		sources.for_each([&](std::size_t v) {
			for (std::size_t w = 0; w < n_; ++w)
				if (test(v, w))
					out.insert(w);
		});
		return out;
	}

	std::size_t hash() const { return detail::hash_blocks(bits_); }

	friend bool operator==(const Relation &, const Relation &) = default;

private:
	std::size_t n_ = 0;
	std::size_t stride_ = 0;
	std::vector<std::uint64_t> bits_;
};

struct VertexSetHash {
	std::size_t operator()(const VertexSet &s) const { return detail::hash_blocks(s.blocks()); }
};

struct RelationHash {
	std::size_t operator()(const Relation &r) const { return r.hash(); }
};

} // namespace shiftca

#endif
