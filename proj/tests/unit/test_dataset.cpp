#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include <boolnet/dataset.hpp>
#include <boolnet/error.hpp>

namespace boolnet {
namespace {

namespace fs = std::filesystem;

constexpr BoolVal BT = BoolVal::T;
constexpr BoolVal BF = BoolVal::F;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("boolnet_ds_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<unsigned char>(v >> s));
}

void write_file(const fs::path& p, const std::vector<unsigned char>& bytes) {
  std::ofstream f(p, std::ios::binary);
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

// n images of rows x cols with the given pixels, plus labels.
void write_pair(const fs::path& dir, std::uint32_t n, std::uint32_t rows, std::uint32_t cols,
                const std::vector<unsigned char>& pixels, const std::vector<unsigned char>& labels,
                std::uint32_t image_magic = 0x803, std::uint32_t label_count = 0) {
  std::vector<unsigned char> img;
  put_u32(img, image_magic);
  put_u32(img, n);
  put_u32(img, rows);
  put_u32(img, cols);
  img.insert(img.end(), pixels.begin(), pixels.end());
  write_file(dir / "images.idx", img);
  std::vector<unsigned char> lab;
  put_u32(lab, 0x801);
  put_u32(lab, label_count ? label_count : n);
  lab.insert(lab.end(), labels.begin(), labels.end());
  write_file(dir / "labels.idx", lab);
}

TEST(Synthetic, Xor2) {
  const DatasetSplit s = generate_synthetic({"xor2"});
  ASSERT_EQ(s.train.size(), 4u);
  const BoolVal expect[4][2] = {{BF, BF}, {BF, BT}, {BT, BF}, {BT, BT}};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 2; ++c) EXPECT_EQ(s.train.inputs.get(r, c), expect[r][c]);
  EXPECT_EQ(s.train.labels, (std::vector<std::int32_t>{0, 1, 1, 0}));
  EXPECT_EQ(s.train.num_classes, 2u);
}

TEST(Synthetic, Parity) {
  const Dataset d = generate_synthetic({"parity3"}).train;
  ASSERT_EQ(d.size(), 8u);
  bool found = false;
  for (std::size_t r = 0; r < 8; ++r)
    if (d.inputs.get(r, 0) == BT && d.inputs.get(r, 1) == BT && d.inputs.get(r, 2) == BF) {
      EXPECT_EQ(d.labels[r], 0);
      found = true;
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(generate_synthetic({"parity4"}).train.size(), 16u);
  EXPECT_THROW(generate_synthetic({"parity17"}), InvalidValue);
  EXPECT_THROW(generate_synthetic({"parity0"}), InvalidValue);
  EXPECT_THROW(generate_synthetic({"spiral"}), InvalidValue);
}

TEST(Synthetic, TeacherDeterministicAndDisjoint) {
  const SyntheticSpec spec{"teacher-8-2", 100, 50, 7};
  const DatasetSplit a = generate_synthetic(spec), b = generate_synthetic(spec);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.test, b.test);
  EXPECT_EQ(a.train.size(), 100u);
  EXPECT_EQ(a.test.size(), 50u);
  for (std::size_t i = 0; i < a.train.size(); ++i)
    for (std::size_t j = 0; j < a.test.size(); ++j) {
      bool same = true;
      for (std::size_t c = 0; c < 8 && same; ++c) same = a.train.inputs.get(i, c) == a.test.inputs.get(j, c);
      EXPECT_FALSE(same);
    }
  EXPECT_THROW(generate_synthetic({"teacher-4-2", 10, 10, 1}), InvalidValue);  // only 16 distinct points
}

TEST(Idx, LoadsAndBinarizes) {
  TempDir dir;
  write_pair(dir.path(), 2, 2, 2, {0, 0, 0, 0, 200, 127, 128, 255}, {3, 1});
  const Dataset d = load_idx(dir.path() / "images.idx", dir.path() / "labels.idx");
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.width(), 4u);
  for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(d.inputs.get(0, c), BF);
  EXPECT_EQ(d.inputs.get(1, 0), BT);
  EXPECT_EQ(d.inputs.get(1, 1), BF);
  EXPECT_EQ(d.inputs.get(1, 2), BT);
  EXPECT_EQ(d.labels, (std::vector<std::int32_t>{3, 1}));
  EXPECT_EQ(d.num_classes, 4u);
  const Dataset none = load_idx(dir.path() / "images.idx", dir.path() / "labels.idx", 255);
  EXPECT_EQ(none.inputs.count_true(), 0u);
}

TEST(Idx, BinarizationMonotoneInThreshold) {
  TempDir dir;
  std::vector<unsigned char> px(64);
  for (std::size_t i = 0; i < px.size(); ++i) px[i] = static_cast<unsigned char>(i * 4);
  write_pair(dir.path(), 1, 8, 8, px, {0});
  for (int t = 0; t < 255; t += 17) {
    const Dataset lo = load_idx(dir.path() / "images.idx", dir.path() / "labels.idx", t);
    const Dataset hi = load_idx(dir.path() / "images.idx", dir.path() / "labels.idx", t + 17);
    for (std::size_t c = 0; c < 64; ++c)
      if (lo.inputs.get(0, c) == BF) EXPECT_EQ(hi.inputs.get(0, c), BF);
  }
}

TEST(Idx, Errors) {
  TempDir dir;
  write_pair(dir.path(), 1, 1, 2, {0, 0}, {0}, 0x804);
  EXPECT_THROW(load_idx(dir.path() / "images.idx", dir.path() / "labels.idx"), FormatError);
  write_pair(dir.path(), 2, 1, 2, {0, 0, 0, 0}, {0}, 0x803, 1);
  EXPECT_THROW(load_idx(dir.path() / "images.idx", dir.path() / "labels.idx"), FormatError);
  write_pair(dir.path(), 2, 1, 2, {0, 0, 0}, {0, 1});
  EXPECT_THROW(load_idx(dir.path() / "images.idx", dir.path() / "labels.idx"), FormatError);
  EXPECT_THROW(load_idx(dir.path() / "missing.idx", dir.path() / "labels.idx"), IoError);
  write_pair(dir.path(), 1, 1, 2, {0, 0}, {5});
  EXPECT_THROW(load_idx(dir.path() / "images.idx", dir.path() / "labels.idx", 127, 3), Error);
}

TEST(Idx, WriteRoundTrip) {
  TempDir dir;
  const Dataset d = generate_synthetic({"teacher-12-3", 40, 10, 2}).train;
  write_idx(d, dir.path() / "i.idx", dir.path() / "l.idx");
  Dataset back = load_idx(dir.path() / "i.idx", dir.path() / "l.idx", 127, d.num_classes);
  back.split = d.split;
  EXPECT_EQ(back, d);
}

TEST(Dataset, SubsetAndValidate) {
  const Dataset d = generate_synthetic({"parity3"}).train;
  const std::vector<std::size_t> idx = {7, 0};
  const Dataset s = d.subset(idx);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.labels[0], d.labels[7]);
  EXPECT_NO_THROW(s.validate());
  Dataset bad = d;
  bad.labels[0] = 5;
  EXPECT_THROW(bad.validate(), Error);
}

}  // namespace
}  // namespace boolnet
