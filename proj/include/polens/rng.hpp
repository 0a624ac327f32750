#pragma once

#include <cstdint>
#include <random>

namespace polens {

/// Named, reproducible random stream. The engine state is a pure function of
/// (master_seed, stream_id), so any draw sequence can be replayed or assigned
/// to a worker without coordination.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : master_(master_seed), id_(stream_id) {}

  std::uint64_t master_seed() const { return master_; }
  std::uint64_t stream_id() const { return id_; }

  /// Disjoint child stream; k in {0, 1} maps id to 2*id + k.
  RngStream substream(std::uint64_t k) const {
    return RngStream(master_, 2 * id_ + k);
  }

  /// Freshly seeded engine for this stream. Every call returns the same state.
  std::mt19937_64 engine() const {
    std::seed_seq seq{
        static_cast<std::uint32_t>(master_ & 0xffffffffu),
        static_cast<std::uint32_t>(master_ >> 32),
        static_cast<std::uint32_t>(id_ & 0xffffffffu),
        static_cast<std::uint32_t>(id_ >> 32),
    };
    return std::mt19937_64(seq);
  }

 private:
  std::uint64_t master_;
  std::uint64_t id_;
};

}  // namespace polens
