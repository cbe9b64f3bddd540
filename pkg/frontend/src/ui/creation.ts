/**
 * Pipelined story creation: select an artwork, annotate it, repeat up to
 * the item limit, then title and submit. Earlier steps are never reopened.
 */

import type { ApiClient } from "../api.js";
import { StoryDraft } from "../draft.js";
import { suggestArtworks } from "../suggest.js";
import type { CatalogItem } from "../types.js";
import { AnnotationConsole } from "./annotation.js";
import { clear, el } from "./dom.js";

export class CreateStoryFlow {
  readonly root: HTMLElement;
  private draft = new StoryDraft();

  constructor(
    private readonly api: ApiClient,
    private readonly catalog: CatalogItem[],
    private readonly creatorId: string,
    private readonly onSubmitted: (storyId: string) => void,
  ) {
    this.root = el("section", { class: "create-flow", "data-testid": "create-flow" });
    void this.showSelect();
  }

  private artworkById(itemId: string): CatalogItem {
    const item = this.catalog.find((c) => c.id === itemId);
    if (!item) throw new Error(`artwork ${itemId} is not in the catalog`);
    return item;
  }

  private async showSelect(): Promise<void> {
    clear(this.root);
    const grid = el("div", { class: "catalog-grid", "data-testid": "catalog-grid" });
    for (const item of this.catalog) {
      if (this.draft.itemIds.includes(item.id)) continue;
      const card = el(
        "button",
        { class: "artwork-card", "data-artwork": item.id, title: item.title },
        el("span", { class: "thumb" }, "\u{1f5bc}"),
        el("span", { class: "card-title" }, item.title || item.id),
      );
      card.addEventListener("click", () => this.annotate(item.id));
      grid.append(card);
    }
    this.root.append(
      el("h2", {}, "➕ Pick an artwork"),
      el("p", { class: "hint" }, `${this.draft.itemIds.length} of ${this.draft.limits.maxItems} chosen`),
      grid,
    );
    if (this.draft.itemIds.length > 0) {
      await this.appendSuggestions(grid);
    }
  }

  /** One similar and one opposite artwork, addable like any other card. */
  private async appendSuggestions(grid: HTMLElement): Promise<void> {
    try {
      const suggestions = await suggestArtworks(this.api, this.catalog, this.draft.itemIds);
      if (!grid.isConnected) return; // the user already moved on
      const strip = el("div", { class: "suggestion-strip", "data-testid": "suggestions" });
      for (const [kind, item] of Object.entries(suggestions) as ["similar" | "opposite", CatalogItem][]) {
        const badge = kind === "similar" ? "≈" : "↔";
        const card = el(
          "button",
          { class: `artwork-card suggested ${kind}`, "data-suggested": kind },
          el("span", { class: "badge" }, badge),
          el("span", { class: "card-title" }, item.title || item.id),
        );
        card.addEventListener("click", () => this.annotate(item.id));
        strip.append(card);
      }
      if (strip.childElementCount > 0) {
        this.root.insertBefore(
          el("div", {}, el("h3", {}, "✨ You may also add"), strip),
          grid,
        );
      }
    } catch {
      // suggestions are optional sugar; selection works without them
    }
  }

  private annotate(itemId: string): void {
    this.draft.selectArtwork(itemId);
    clear(this.root);
    const consoleView = new AnnotationConsole(this.draft, this.artworkById(itemId), {
      onAddAnother: () => {
        this.draft.nextArtwork();
        void this.showSelect();
      },
      onFinish: () => {
        this.draft.finishSelection();
        this.showTitle();
      },
    });
    this.root.append(consoleView.root);
  }

  private showTitle(): void {
    clear(this.root);
    const input = el("input", {
      class: "title-input",
      placeholder: "story title",
      "data-testid": "title-input",
    });
    const submit = el(
      "button",
      { class: "primary", "data-testid": "submit-story" },
      "\u{1f4e4} Share story",
    );
    const status = el("p", { class: "status", "data-testid": "submit-status" });
    submit.addEventListener("click", () => {
      void (async () => {
        try {
          this.draft.setTitle(input.value);
          const payload = this.draft.build(`story-${Date.now().toString(36)}`, this.creatorId);
          const result = await this.api.submitStory(payload);
          this.onSubmitted(result.id);
        } catch (error) {
          status.textContent = `⚠ ${(error as Error).message}`;
        }
      })();
    });
    this.root.append(el("h2", {}, "\u{1f4dd} Name your story"), input, submit, status);
  }
}
