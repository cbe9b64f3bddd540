/**
 * Wire types for the catalog service.
 * These mirror the service's JSON responses one to one; the client never
 * derives emotional state on its own.
 */

export type EmojiName =
  | "love"
  | "curiosity"
  | "delight"
  | "joy"
  | "fear"
  | "sadness"
  | "disgust";

export const EMOJI_NAMES: readonly EmojiName[] = [
  "love",
  "curiosity",
  "delight",
  "joy",
  "fear",
  "sadness",
  "disgust",
];

/** Glyphs for the fixed annotation palette (icon-first UI). */
export const EMOJI_GLYPHS: Record<EmojiName, string> = {
  love: "❤️",
  curiosity: "\u{1f9d0}",
  delight: "\u{1f929}",
  joy: "\u{1f604}",
  fear: "\u{1f628}",
  sadness: "\u{1f622}",
  disgust: "\u{1f922}",
};

export type CommentKey = "reminds" | "think" | "feel";

/** Affirmative comment templates, shown with their icons. */
export const COMMENT_TEMPLATES: Record<CommentKey, { icon: string; prompt: string }> = {
  reminds: { icon: "\u{1f4ad}", prompt: "it reminds me of ..." },
  think: { icon: "\u{1f4a1}", prompt: "it makes me think of ..." },
  feel: { icon: "\u{1f496}", prompt: "it makes me feel ..." },
};

export interface CatalogItem {
  id: string;
  title: string;
  author?: string | null;
  description: string;
  annotations?: string[];
}

export interface PlacedEmoji {
  name: EmojiName;
  x: number;
  y: number;
}

export interface StoryItemPayload {
  itemId: string;
  emojis: EmojiName[];
  tags: string[];
  comments: Record<CommentKey, string>;
}

export interface StoryPayload {
  id: string;
  title: string;
  creator: string;
  items: StoryItemPayload[];
}

export interface StoryDocument extends StoryPayload {
  emotions?: Record<string, number>;
}

export interface EmotionAssignment {
  emotion: string;
  score: number;
  matched: string[];
}

export type RelationKind = "same" | "similar" | "opposite";

export interface RecommendationEntry {
  storyId: string;
  title: string;
  relevance: number;
  /** [emotion in the source story, emotion in the recommended story] */
  pair: [string, string];
}

export interface RecommendationResponse {
  source: string;
  kind: RelationKind;
  entries: RecommendationEntry[];
}

export interface WheelBasic {
  name: string;
  sector: number;
}

export interface WheelDyad {
  name: string;
  components: [string, string];
  kind: "primary" | "secondary" | "tertiary";
  position: number;
}

export interface WheelDocument {
  schema: "wheel/1";
  basics: WheelBasic[];
  dyads: WheelDyad[];
}
