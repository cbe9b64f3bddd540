/**
 * Optional artwork suggestions during story creation: one similar and one
 * opposite artwork, derived from server-assigned item emotions plus the
 * served wheel document. Emotions always come from the service; only the
 * wheel geometry (a static document) is evaluated here.
 */

import type { ApiClient } from "./api.js";
import type { CatalogItem, RelationKind, WheelDocument } from "./types.js";

interface WheelIndex {
  position: Map<string, number>;
  opposite: Map<string, string>;
}

export function indexWheel(wheel: WheelDocument): WheelIndex {
  const position = new Map<string, number>();
  const basicBySector = new Map<number, string>();
  for (const basic of wheel.basics) {
    position.set(basic.name, basic.sector);
    basicBySector.set(basic.sector, basic.name);
  }
  const opposite = new Map<string, string>();
  for (const basic of wheel.basics) {
    opposite.set(basic.name, basicBySector.get((basic.sector + 4) % 8)!);
  }
  const dyadByPair = new Map<string, string>();
  for (const dyad of wheel.dyads) {
    position.set(dyad.name, dyad.position);
    dyadByPair.set([...dyad.components].sort().join("+"), dyad.name);
  }
  for (const dyad of wheel.dyads) {
    const flipped = dyad.components.map((c) => opposite.get(c)!).sort().join("+");
    opposite.set(dyad.name, dyadByPair.get(flipped)!);
  }
  return { position, opposite };
}

export function relationOf(index: WheelIndex, a: string, b: string): RelationKind | "none" {
  if (!index.position.has(a) || !index.position.has(b)) return "none";
  if (a === b) return "same";
  if (index.opposite.get(a) === b) return "opposite";
  const pa = index.position.get(a)!;
  const pb = index.position.get(b)!;
  const raw = Math.abs(pa - pb) % 8;
  if (Math.min(raw, 8 - raw) <= 1) return "similar";
  return "none";
}

export interface ArtworkSuggestions {
  similar?: CatalogItem;
  opposite?: CatalogItem;
}

/**
 * Pick at most one similar and one opposite artwork for the current
 * draft, excluding artworks already selected. Candidates without any
 * assigned emotion never qualify.
 */
export async function suggestArtworks(
  api: ApiClient,
  catalog: CatalogItem[],
  draftItemIds: string[],
): Promise<ArtworkSuggestions> {
  if (draftItemIds.length === 0) return {};
  const index = indexWheel(await api.wheel());
  const draftEmotions = new Set<string>();
  for (const itemId of draftItemIds) {
    for (const assignment of (await api.itemEmotions(itemId)).emotions) {
      draftEmotions.add(assignment.emotion);
    }
  }
  const suggestions: ArtworkSuggestions = {};
  for (const candidate of catalog) {
    if (draftItemIds.includes(candidate.id)) continue;
    if (suggestions.similar && suggestions.opposite) break;
    const { emotions } = await api.itemEmotions(candidate.id);
    for (const assignment of emotions) {
      for (const source of draftEmotions) {
        const relation = relationOf(index, source, assignment.emotion);
        if (relation === "similar" && !suggestions.similar) suggestions.similar = candidate;
        if (relation === "opposite" && !suggestions.opposite) suggestions.opposite = candidate;
      }
    }
  }
  return suggestions;
}
