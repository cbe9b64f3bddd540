/**
 * Story draft state machine.
 *
 * Creation is a rigidly pipelined loop: pick an artwork, annotate it,
 * then either pick the next one or move on to the title. Completed steps
 * are frozen — there is no way back into an earlier annotation — and an
 * artwork cannot advance until it carries at least one annotation of any
 * kind (emoji, tag or template comment).
 */

import type {
  CommentKey,
  EmojiName,
  PlacedEmoji,
  StoryItemPayload,
  StoryPayload,
} from "./types.js";
import { EMOJI_NAMES } from "./types.js";

export type DraftPhase = "select" | "annotate" | "title" | "done";

export interface DraftLimits {
  minItems: number;
  maxItems: number;
}

export const DEFAULT_LIMITS: DraftLimits = { minItems: 1, maxItems: 3 };

interface DraftEntry {
  itemId: string;
  emojis: PlacedEmoji[];
  tags: string[];
  comments: Record<CommentKey, string>;
  sealed: boolean;
}

export class StoryDraft {
  private entries: DraftEntry[] = [];
  private phase_: DraftPhase = "select";
  private title_ = "";

  constructor(readonly limits: DraftLimits = DEFAULT_LIMITS) {}

  get phase(): DraftPhase {
    return this.phase_;
  }

  get itemIds(): string[] {
    return this.entries.map((e) => e.itemId);
  }

  get title(): string {
    return this.title_;
  }

  private get current(): DraftEntry {
    const entry = this.entries[this.entries.length - 1];
    if (this.phase_ !== "annotate" || !entry || entry.sealed) {
      throw new Error("no artwork is being annotated");
    }
    return entry;
  }

  /** Current artwork's annotations, for rendering. */
  currentAnnotations(): { emojis: PlacedEmoji[]; tags: string[]; comments: Record<CommentKey, string> } {
    const { emojis, tags, comments } = this.current;
    return { emojis: [...emojis], tags: [...tags], comments: { ...comments } };
  }

  selectArtwork(itemId: string): void {
    if (this.phase_ !== "select") throw new Error(`cannot select in phase ${this.phase_}`);
    if (this.entries.some((e) => e.itemId === itemId)) {
      throw new Error(`artwork ${itemId} is already part of the story`);
    }
    if (this.entries.length >= this.limits.maxItems) {
      throw new Error(`a story holds at most ${this.limits.maxItems} artworks`);
    }
    this.entries.push({
      itemId,
      emojis: [],
      tags: [],
      comments: { reminds: "", think: "", feel: "" },
      sealed: false,
    });
    this.phase_ = "annotate";
  }

  addEmoji(name: EmojiName, x = 0.5, y = 0.5): void {
    if (!EMOJI_NAMES.includes(name)) throw new Error(`unknown emoji ${name}`);
    this.current.emojis.push({ name, x, y });
  }

  moveEmoji(index: number, x: number, y: number): void {
    const emoji = this.current.emojis[index];
    if (!emoji) throw new Error(`no emoji at ${index}`);
    emoji.x = x;
    emoji.y = y;
  }

  removeEmoji(index: number): void {
    if (!this.current.emojis[index]) throw new Error(`no emoji at ${index}`);
    this.current.emojis.splice(index, 1);
  }

  addTag(tag: string): void {
    const cleaned = tag.trim();
    if (cleaned) this.current.tags.push(cleaned);
  }

  removeTag(index: number): void {
    this.current.tags.splice(index, 1);
  }

  setComment(key: CommentKey, text: string): void {
    this.current.comments[key] = text;
  }

  /** The advance gate: at least one annotation of any kind. */
  canAdvance(): boolean {
    if (this.phase_ !== "annotate") return false;
    const entry = this.entries[this.entries.length - 1];
    if (!entry) return false;
    return (
      entry.emojis.length > 0 ||
      entry.tags.length > 0 ||
      Object.values(entry.comments).some((text) => text.trim().length > 0)
    );
  }

  get canAddAnother(): boolean {
    return this.entries.length < this.limits.maxItems;
  }

  get canFinish(): boolean {
    return this.entries.length >= this.limits.minItems;
  }

  /** Seal the current annotation and return to artwork selection. */
  nextArtwork(): void {
    if (!this.canAddAnother) {
      throw new Error(`a story holds at most ${this.limits.maxItems} artworks`);
    }
    this.seal();
    this.phase_ = "select";
  }

  /** Seal the current annotation and move to the title step. */
  finishSelection(): void {
    if (!this.canFinish) {
      throw new Error(`a story needs at least ${this.limits.minItems} artwork(s)`);
    }
    this.seal();
    this.phase_ = "title";
  }

  private seal(): void {
    if (!this.canAdvance()) {
      throw new Error("annotation required: add an emoji, a tag or a comment first");
    }
    this.current.sealed = true;
  }

  setTitle(title: string): void {
    if (this.phase_ !== "title") throw new Error(`cannot set title in phase ${this.phase_}`);
    this.title_ = title.trim();
  }

  /** Final story/1 payload; marks the draft as done. */
  build(storyId: string, creator: string): StoryPayload {
    if (this.phase_ !== "title") throw new Error(`cannot submit in phase ${this.phase_}`);
    if (!this.title_) throw new Error("a story needs a title");
    const items: StoryItemPayload[] = this.entries.map((entry) => ({
      itemId: entry.itemId,
      emojis: entry.emojis.map((e) => e.name),
      tags: [...entry.tags],
      comments: { ...entry.comments },
    }));
    this.phase_ = "done";
    return { id: storyId, title: this.title_, creator, items };
  }
}
