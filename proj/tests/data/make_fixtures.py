# Copyright 2026 The etype Authors.
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

"""Writes the bundled test corpus: hand-built dependency parses for twenty
sentences plus a small deterministic feature set, sense dictionary and
background statistics for end-to-end runs.

Usage: python3 make_fixtures.py [OUT_DIR]   (defaults to this directory)
"""

import hashlib
import json
import math
import os
import random
import sys

# (sentence_id, text, [(text, lemma, pos, dep_label, head)])  head -1 = root
SENTENCES = [
    ("s01", "Police detained hundreds of people.", [
        ("Police", "Police", "PROPN", "nsubj", 1),
        ("detained", "detain", "VERB", "ROOT", -1),
        ("hundreds", "hundred", "NOUN", "dobj", 1),
        ("of", "of", "ADP", "prep", 2),
        ("people", "people", "NOUN", "pobj", 3),
        (".", ".", "PUNCT", "punct", 1)]),
    ("s02", "Gunmen attacked a police station in the capital.", [
        ("Gunmen", "gunman", "NOUN", "nsubj", 1),
        ("attacked", "attack", "VERB", "ROOT", -1),
        ("a", "a", "DET", "det", 4),
        ("police", "police", "NOUN", "compound", 4),
        ("station", "station", "NOUN", "dobj", 1),
        ("in", "in", "ADP", "prep", 1),
        ("the", "the", "DET", "det", 7),
        ("capital", "capital", "NOUN", "pobj", 5),
        (".", ".", "PUNCT", "punct", 1)]),
    ("s03", "The court sentenced the opposition leader to prison.", [
        ("The", "the", "DET", "det", 1),
        ("court", "court", "NOUN", "nsubj", 2),
        ("sentenced", "sentence", "VERB", "ROOT", -1),
        ("the", "the", "DET", "det", 5),
        ("opposition", "opposition", "NOUN", "compound", 5),
        ("leader", "leader", "NOUN", "dobj", 2),
        ("to", "to", "ADP", "prep", 2),
        ("prison", "prison", "NOUN", "pobj", 6),
        (".", ".", "PUNCT", "punct", 2)]),
    ("s04", "Thousands of people were killed in the war.", [
        ("Thousands", "thousand", "NOUN", "nsubjpass", 4),
        ("of", "of", "ADP", "prep", 0),
        ("people", "people", "NOUN", "pobj", 1),
        ("were", "be", "AUX", "auxpass", 4),
        ("killed", "kill", "VERB", "ROOT", -1),
        ("in", "in", "ADP", "prep", 4),
        ("the", "the", "DET", "det", 7),
        ("war", "war", "NOUN", "pobj", 5),
        (".", ".", "PUNCT", "punct", 4)]),
    ("s05", "Rebels fired rockets and seized weapons.", [
        ("Rebels", "rebel", "NOUN", "nsubj", 1),
        ("fired", "fire", "VERB", "ROOT", -1),
        ("rockets", "rocket", "NOUN", "dobj", 1),
        ("and", "and", "CCONJ", "cc", 1),
        ("seized", "seize", "VERB", "conj", 1),
        ("weapons", "weapon", "NOUN", "dobj", 4),
        (".", ".", "PUNCT", "punct", 1)]),
    ("s06", "A small group of protesters were arrested.", [
        ("A", "a", "DET", "det", 2),
        ("small", "small", "ADJ", "amod", 2),
        ("group", "group", "NOUN", "nsubjpass", 6),
        ("of", "of", "ADP", "prep", 2),
        ("protesters", "protester", "NOUN", "pobj", 3),
        ("were", "be", "AUX", "auxpass", 6),
        ("arrested", "arrest", "VERB", "ROOT", -1),
        (".", ".", "PUNCT", "punct", 6)]),
    ("s07", "He was arrested yesterday.", [
        ("He", "He", "PRON", "nsubjpass", 2),
        ("was", "be", "AUX", "auxpass", 2),
        ("arrested", "arrest", "VERB", "ROOT", -1),
        ("yesterday", "yesterday", "NOUN", "npadvmod", 2),
        (".", ".", "PUNCT", "punct", 2)]),
    ("s08", "The army launched an offensive against the rebels.", [
        ("The", "the", "DET", "det", 1),
        ("army", "army", "NOUN", "nsubj", 2),
        ("launched", "launch", "VERB", "ROOT", -1),
        ("an", "an", "DET", "det", 4),
        ("offensive", "offensive", "NOUN", "dobj", 2),
        ("against", "against", "ADP", "prep", 4),
        ("the", "the", "DET", "det", 7),
        ("rebels", "rebel", "NOUN", "pobj", 5),
        (".", ".", "PUNCT", "punct", 2)]),
    ("s09", "The virus has infected the patient.", [
        ("The", "the", "DET", "det", 1),
        ("virus", "virus", "NOUN", "nsubj", 3),
        ("has", "have", "AUX", "aux", 3),
        ("infected", "infect", "VERB", "ROOT", -1),
        ("the", "the", "DET", "det", 5),
        ("patient", "patient", "NOUN", "dobj", 3),
        (".", ".", "PUNCT", "punct", 3)]),
    ("s10", "Volunteers gave the victims food.", [
        ("Volunteers", "volunteer", "NOUN", "nsubj", 1),
        ("gave", "give", "VERB", "ROOT", -1),
        ("the", "the", "DET", "det", 3),
        ("victims", "victim", "NOUN", "dative", 1),
        ("food", "food", "NOUN", "dobj", 1),
        (".", ".", "PUNCT", "punct", 1)]),
    ("s11", "The driver became a suspect.", [
        ("The", "the", "DET", "det", 1),
        ("driver", "driver", "NOUN", "nsubj", 2),
        ("became", "become", "VERB", "ROOT", -1),
        ("a", "a", "DET", "det", 4),
        ("suspect", "suspect", "NOUN", "attr", 2),
        (".", ".", "PUNCT", "punct", 2)]),
    ("s12", "The vaccine was tested by researchers.", [
        ("The", "the", "DET", "det", 1),
        ("vaccine", "vaccine", "NOUN", "nsubjpass", 3),
        ("was", "be", "AUX", "auxpass", 3),
        ("tested", "test", "VERB", "ROOT", -1),
        ("by", "by", "ADP", "agent", 3),
        ("researchers", "researcher", "NOUN", "pobj", 4),
        (".", ".", "PUNCT", "punct", 3)]),
    ("s13", "Voters elected him president.", [
        ("Voters", "voter", "NOUN", "nsubj", 1),
        ("elected", "elect", "VERB", "ROOT", -1),
        ("him", "he", "PRON", "dobj", 1),
        ("president", "president", "NOUN", "oprd", 1),
        (".", ".", "PUNCT", "punct", 1)]),
    ("s14", "There were no casualties.", [
        ("There", "there", "PRON", "expl", 1),
        ("were", "be", "AUX", "ROOT", -1),
        ("no", "no", "DET", "det", 3),
        ("casualties", "casualty", "NOUN", "attr", 1),
        (".", ".", "PUNCT", "punct", 1)]),
    ("s15", "Soldiers were running toward the border.", [
        ("Soldiers", "soldier", "NOUN", "nsubj", 2),
        ("were", "be", "AUX", "aux", 2),
        ("running", "run", "VERB", "ROOT", -1),
        ("toward", "toward", "ADP", "prep", 2),
        ("the", "the", "DET", "det", 5),
        ("border", "border", "NOUN", "pobj", 3),
        (".", ".", "PUNCT", "punct", 2)]),
    ("s16", "The minister resigned after regulators fined the company.", [
        ("The", "the", "DET", "det", 1),
        ("minister", "minister", "NOUN", "nsubj", 2),
        ("resigned", "resign", "VERB", "ROOT", -1),
        ("after", "after", "SCONJ", "mark", 5),
        ("regulators", "regulator", "NOUN", "nsubj", 5),
        ("fined", "fine", "VERB", "advcl", 2),
        ("the", "the", "DET", "det", 7),
        ("company", "company", "NOUN", "dobj", 5),
        (".", ".", "PUNCT", "punct", 2)]),
    ("s17", "Health workers distributed the vaccine to villages.", [
        ("Health", "health", "NOUN", "compound", 1),
        ("workers", "worker", "NOUN", "nsubj", 2),
        ("distributed", "distribute", "VERB", "ROOT", -1),
        ("the", "the", "DET", "det", 4),
        ("vaccine", "vaccine", "NOUN", "dobj", 2),
        ("to", "to", "ADP", "prep", 2),
        ("villages", "village", "NOUN", "pobj", 5),
        (".", ".", "PUNCT", "punct", 2)]),
    ("s18", "Police arrested 300 of the demonstrators.", [
        ("Police", "Police", "PROPN", "nsubj", 1),
        ("arrested", "arrest", "VERB", "ROOT", -1),
        ("300", "300", "NUM", "dobj", 1),
        ("of", "of", "ADP", "prep", 2),
        ("the", "the", "DET", "det", 5),
        ("demonstrators", "demonstrator", "NOUN", "pobj", 3),
        (".", ".", "PUNCT", "punct", 1)]),
    ("s19", "Troops released the hostages captured in the raid.", [
        ("Troops", "troop", "NOUN", "nsubj", 1),
        ("released", "release", "VERB", "ROOT", -1),
        ("the", "the", "DET", "det", 3),
        ("hostages", "hostage", "NOUN", "dobj", 1),
        ("captured", "capture", "VERB", "acl", 3),
        ("in", "in", "ADP", "prep", 4),
        ("the", "the", "DET", "det", 7),
        ("raid", "raid", "NOUN", "pobj", 5),
        (".", ".", "PUNCT", "punct", 1)]),
    ("s20", "The storm killed a number of residents.", [
        ("The", "the", "DET", "det", 1),
        ("storm", "storm", "NOUN", "nsubj", 2),
        ("killed", "kill", "VERB", "ROOT", -1),
        ("a", "a", "DET", "det", 4),
        ("number", "number", "NOUN", "dobj", 2),
        ("of", "of", "ADP", "prep", 4),
        ("residents", "resident", "NOUN", "pobj", 5),
        (".", ".", "PUNCT", "punct", 2)]),
]

# Mentions that receive features: (sentence_id, token_index).
PREDICATES = [("s01", 1), ("s02", 1), ("s03", 2), ("s04", 4), ("s05", 1),
              ("s05", 4), ("s06", 6), ("s07", 2), ("s08", 2), ("s09", 3),
              ("s10", 1), ("s11", 2), ("s12", 3), ("s13", 1), ("s16", 5),
              ("s17", 2), ("s18", 1), ("s19", 1), ("s20", 2)]
HEADS = [("s01", 4), ("s02", 4), ("s03", 5), ("s04", 2), ("s05", 2),
         ("s05", 5), ("s06", 4), ("s07", 0), ("s08", 4), ("s09", 5),
         ("s10", 3), ("s10", 4), ("s11", 4), ("s12", 1), ("s13", 2),
         ("s13", 3), ("s16", 7), ("s17", 4), ("s18", 5), ("s19", 3),
         ("s20", 6)]

# Coarse topic of each lemma; drives the synthetic embeddings.
TOPIC = {
    "attack": "conflict", "fire": "conflict", "launch": "conflict",
    "seize": "conflict", "kill": "conflict", "station": "conflict",
    "rocket": "conflict", "weapon": "conflict", "offensive": "conflict",
    "people": "conflict", "resident": "conflict",
    "detain": "justice", "arrest": "justice", "sentence": "justice",
    "fine": "justice", "release": "justice", "leader": "justice",
    "protester": "justice", "demonstrator": "justice", "company": "justice",
    "hostage": "justice", "he": "justice", "suspect": "justice",
    "infect": "health", "test": "health", "distribute": "health",
    "give": "health", "patient": "health", "vaccine": "health",
    "victim": "health", "food": "health",
    "become": "politics", "elect": "politics", "president": "politics",
    "dismiss": "justice",
}
TOPIC_WORDS = {
    "conflict": ["attack", "bomb", "strike", "shoot", "raid", "assault",
                 "kill", "hit", "shell", "ambush", "target", "destroy"],
    "justice": ["arrest", "detain", "charge", "jail", "hold", "convict",
                "release", "sentence", "punish", "fine", "free", "try"],
    "health": ["treat", "test", "vaccinate", "infect", "cure", "examine",
               "feed", "supply", "give", "deliver", "help", "screen"],
    "politics": ["elect", "appoint", "name", "choose", "become", "make",
                 "vote", "nominate", "select", "install", "pick", "back"],
}
D_EMB = 16
L = 10

DICTIONARY = {
    "fire": [
        {"sense_id": "fire.01", "definition": "shoot a weapon",
         "examples": [{"text": "The soldiers fired their rifles.",
                       "target_index": 2, "topic": "conflict"},
                      {"text": "They fired shells at the town.",
                       "target_index": 1, "topic": "conflict"}]},
        {"sense_id": "fire.02", "definition": "dismiss from a job",
         "examples": [{"text": "The company fired the manager.",
                       "target_index": 2, "topic": "justice"},
                      {"text": "She was fired last week.",
                       "target_index": 2, "topic": "justice"}]},
    ],
    "test": [
        {"sense_id": "test.01", "definition": "examine for quality",
         "examples": [{"text": "Scientists tested the drug.",
                       "target_index": 1, "topic": "health"}]},
        {"sense_id": "test.02", "definition": "give an examination",
         "examples": [{"text": "The teacher tested the pupils.",
                       "target_index": 2, "topic": "politics"}]},
    ],
    "arrest": [
        {"sense_id": "arrest.01", "definition": "take into custody",
         "examples": [{"text": "Officers arrested the thief.",
                       "target_index": 1, "topic": "justice"}]},
    ],
}

BACKGROUND_N = 100000
GENERIC = {"give": 30000, "become": 25000, "he": 60000, "people": 20000,
           "make": 40000, "food": 8000, "company": 9000, "leader": 5000}


def rng_for(*parts):
    digest = hashlib.sha256("/".join(parts).encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def unit(vec):
    n = math.sqrt(sum(v * v for v in vec))
    return [v / n for v in vec]


def gauss_vec(rng):
    return [rng.gauss(0.0, 1.0) for _ in range(D_EMB)]


def embedding(topic, lemma, context):
    t = unit(gauss_vec(rng_for("topic", topic)))
    w = unit(gauss_vec(rng_for("word", lemma)))
    c = gauss_vec(rng_for("ctx", context))
    vec = [a + 0.4 * b + 0.05 * n for a, b, n in zip(t, w, c)]
    return [round(v, 6) for v in vec]


def mwp(topic, lemma, context):
    words = list(TOPIC_WORDS[topic])
    rng_for("mwp", lemma, context).shuffle(words)
    if lemma.isalpha() and lemma not in words:
        words.insert(0, lemma)
    return words[:L]


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.dirname(
        os.path.abspath(__file__))
    pipe = os.path.join(out, "pipeline")
    os.makedirs(pipe, exist_ok=True)

    parses = {}
    with open(os.path.join(out, "fixture_parses.jsonl"), "w") as f:
        for sid, text, toks in SENTENCES:
            tokens = [{"index": i, "text": t, "lemma": lem, "pos": pos,
                       "dep_label": dep, "head": head if head >= 0 else None}
                      for i, (t, lem, pos, dep, head) in enumerate(toks)]
            parses[sid] = tokens
            f.write(json.dumps({"sentence_id": sid, "text": text,
                                "tokens": tokens}) + "\n")

    records = []
    for kind, mentions in (("predicate", PREDICATES), ("object_head", HEADS)):
        for sid, idx in mentions:
            lemma = parses[sid][idx]["lemma"].lower()
            topic = TOPIC[lemma]
            ctx = "%s:%d" % (sid, idx)
            records.append({"mention_id": ctx, "sentence_id": sid,
                            "token_index": idx, "term": lemma, "kind": kind,
                            "embedding": embedding(topic, lemma, ctx),
                            "mwp": mwp(topic, lemma, ctx)})
    for lemma, senses in sorted(DICTIONARY.items()):
        for sense in senses:
            for k, ex in enumerate(sense["examples"]):
                key = "%s#%d" % (sense["sense_id"], k)
                records.append({"mention_id": key, "sentence_id": "dict:" + key,
                                "token_index": ex["target_index"],
                                "term": lemma, "kind": "sense_example",
                                "embedding": embedding(ex["topic"], lemma, key),
                                "mwp": mwp(ex["topic"], lemma, key)})
    with open(os.path.join(pipe, "features.jsonl"), "w") as f:
        f.write(json.dumps({"_header": {"schema": "etype.mention_feature",
                                        "schema_version": 1,
                                        "d_emb": D_EMB,
                                        "mwp_length": L}}) + "\n")
        for r in records:
            f.write(json.dumps(r) + "\n")

    dictionary = {
        lemma: [{"sense_id": s["sense_id"], "definition": s["definition"],
                 "examples": [{"text": e["text"],
                               "target_index": e["target_index"]}
                              for e in s["examples"]]} for s in senses]
        for lemma, senses in DICTIONARY.items()}
    with open(os.path.join(pipe, "dictionary.json"), "w") as f:
        json.dump(dictionary, f, indent=2, sort_keys=True)
        f.write("\n")

    with open(os.path.join(pipe, "background.tsv"), "w") as f:
        f.write("N_BS=%d\n" % BACKGROUND_N)
        for word in sorted(TOPIC):
            bsf = GENERIC.get(word, 1 + rng_for("bsf", word).randrange(2000))
            f.write("%s\t%d\n" % (word, bsf))


if __name__ == "__main__":
    main()
