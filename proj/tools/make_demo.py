#!/usr/bin/env python3
# Copyright 2026 The Topicshift Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the synthetic demo corpus under data/demo/."""

import json
import pathlib
import random

TOPICS = [
    ("Big Data", "BigData"), ("Machine Learning", "MachineLearning"),
    ("Cloud Computing", "CloudComputing"), ("Deep Learning", "DeepLearning"),
    ("Internet of Things", "IoT"), ("Data Mining", "DataMining"),
    ("Artificial Intelligence", "AI"), ("Data Science", "DataScience"),
    ("Privacy", "Privacy"), ("Smart Cities", "SmartCities"),
    ("Social Media", "SocialMedia"), ("Health Care", "HealthCare"),
    ("Genomics", "Genomics"), ("Climate Change", "ClimateChange"),
    ("Open Data", "OpenData"), ("Precision Medicine", "PrecisionMedicine"),
]

# Topics in the same theme are mentioned together more often, which gives
# them a distinctive co-occurrence profile.
THEMES = [[0, 1, 3, 6, 7], [2, 4, 9, 14], [11, 12, 15, 5], [8, 10, 13]]

TITLES = [
    "How {a} is changing {b}",
    "New study connects {a} with {b}",
    "The promise of {a} for {b}",
    "What {a} means for {b}",
    "Researchers apply {a} to {b}",
    "A closer look at {a} and {b}",
    "Experts warn about {a} and {b}",
]

SUMMARIES = [
    "{A} is a field concerned with {b}. It grew quickly after 2010.",
    "{A} refers to the adoption of {b} in large organizations. See also {c}.",
    "{A} (e.g. in industry) combines {b} with statistical methods. Critics disagree.",
]


def pick(rng, k):
    """k distinct topics, usually from one theme."""
    if rng.random() < 0.8:
        theme = rng.choice(THEMES)
        return [TOPICS[i] for i in rng.sample(theme, k)]
    return rng.sample(TOPICS, k)


def main():
    rng = random.Random(7)
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "demo"
    out.mkdir(parents=True, exist_ok=True)

    pubs = []
    for i in range(50):
        topics = pick(rng, rng.randint(2, 3))
        keywords = [t[0] if rng.random() < 0.7 else t[0].lower() for t in topics]
        pubs.append({
            "doi": f"10.5555/demo.{i:03d}",
            "title": f"On {topics[0][0].lower()} and {topics[1][0].lower()}",
            "abstract": "",
            "author_keywords": keywords,
            "year": 2012 + i % 6,
            "doc_type": "review" if i % 9 == 0 else "article",
        })

    events = []
    n = 0

    def add(platform, dois, text):
        nonlocal n
        events.append({
            "event_id": f"ev{n:04d}",
            "platform": platform,
            "dois": dois,
            "text": text,
            "language": "en",
        })
        n += 1

    for i in range(160):
        pub = rng.randrange(50)
        topics = pick(rng, 2)
        tags = " ".join("#" + t[1] for t in topics)
        add("twitter", [pubs[pub]["doi"]],
            f"Interesting paper on {topics[0][0].lower()} {tags} https://doi.org/x{i}")
    for platform, count in (("news", 45), ("blog", 40), ("policy", 12)):
        for _ in range(count):
            pub = rng.randrange(50)
            a, b = (t[0].lower() for t in pick(rng, 2))
            add(platform, [pubs[pub]["doi"]], rng.choice(TITLES).format(a=a, b=b))
    for _ in range(15):
        pub = rng.randrange(50)
        a, b, c = (t[0].lower() for t in pick(rng, 3))
        add("wikipedia", [pubs[pub]["doi"]],
            rng.choice(SUMMARIES).format(A=a.capitalize(), b=b, c=c))
    # One exact duplicate post and one non-English post.
    add("twitter", events[0]["dois"], events[0]["text"])
    add("news", [pubs[3]["doi"]], "Nuevos datos sobre big data")
    events[-1]["language"] = "es"

    with open(out / "publications.jsonl", "w", encoding="utf-8") as f:
        for pub in pubs:
            f.write(json.dumps(pub, ensure_ascii=False) + "\n")
    with open(out / "events.jsonl", "w", encoding="utf-8") as f:
        for event in events:
            f.write(json.dumps(event, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
